#pragma once

#include <string>
#include <vector>

#include "renewscen/corpus/series.hpp"
#include "renewscen/genconvert.hpp"

namespace renewscen {

enum class CostAxis { Year, CumulativeGeneration };

std::string_view to_string(CostAxis axis) noexcept;

/// Costs against either calendar year or cumulative generation capability
/// (TWh/yr). x strictly increasing, costs > 0.
class CostSeries {
 public:
  CostSeries(std::string technology, CostAxis axis, Unit cost_unit, std::vector<Sample> samples);

  const std::string& technology() const noexcept { return technology_; }
  CostAxis axis() const noexcept { return axis_; }
  Unit cost_unit() const noexcept { return cost_unit_; }
  std::span<const Sample> samples() const noexcept { return samples_; }  ///< (x, cost)

 private:
  std::string technology_;
  CostAxis axis_;
  Unit cost_unit_;
  std::vector<Sample> samples_;
};

/// Cost-by-year series from a loaded unit_cost file.
CostSeries cost_by_year(const CapacitySeries& costs);

/// Re-keys a cost-by-year series on generation capability: each cost year is
/// mapped to the capacity observed in that same year times the capacity factor.
/// Years without a capacity sample are an Error(DatasetMissing).
CostSeries join_cost_to_generation(const CostSeries& by_year, const TechnologyProfile& capacity);

/// log10 cost = log10_intercept + log10_slope * log10 x.
struct LearningCurveFit {
  double log10_intercept = 0.0;
  double log10_slope = 0.0;
  double r_squared = 0.0;
  double rmse_log10 = 0.0;
  double x_min = 0.0;
  double x_max = 0.0;
  CostAxis axis = CostAxis::CumulativeGeneration;
};

/// cost(t) = cost_at_reference * annual_factor^(t - reference_year).
struct TimeDecayFit {
  double reference_year = 0.0;
  double cost_at_reference = 0.0;
  double annual_factor = 1.0;
  double r_squared = 0.0;
  YearRange window{};

  double cost_at(double year) const;
};

/// Costs below this are flagged; the source treats ~1 USD/MWh as the floor
/// of its own extrapolation.
inline constexpr double kCostFloorUsdPerMWh = 1.0;

struct CostEstimate {
  double cost;
  bool extrapolated;  ///< x outside the fitted range
  bool below_floor;   ///< cost < kCostFloorUsdPerMWh
};

struct CurveCrossing {
  double x;
  double cost;
};

LearningCurveFit fit_learning_curve(const CostSeries& series);

/// Fractional cost decline per doubling, 1 - 2^slope. Throws Error(PositiveSlope).
double learning_rate(const LearningCurveFit& fit);

/// Throws Error(NonPositiveX).
CostEstimate cost_at(const LearningCurveFit& fit, double x);

/// Intersection of two bi-logarithmic lines. Throws Error(ParallelLines).
CurveCrossing curve_crossing(const LearningCurveFit& a, const LearningCurveFit& b);

/// Log-space least squares of cost on year.
TimeDecayFit fit_time_decay(const CostSeries& series);

}  // namespace renewscen
