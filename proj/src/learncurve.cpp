#include "renewscen/learncurve.hpp"

#include <cmath>
#include <utility>

#include "renewscen/error.hpp"
#include "renewscen/growthfit.hpp"

namespace renewscen {

std::string_view to_string(CostAxis axis) noexcept {
  return axis == CostAxis::Year ? "year" : "cumulative_generation_TWh_per_year";
}

CostSeries::CostSeries(std::string technology, CostAxis axis, Unit cost_unit,
                       std::vector<Sample> samples)
    : technology_(std::move(technology)),
      axis_(axis),
      cost_unit_(cost_unit),
      samples_(std::move(samples)) {
  if (cost_unit_ != Unit::USDPerMWh && cost_unit_ != Unit::USDPerKWh) {
    throw Error(ErrorCode::UnitMismatch, "cost series needs USD_per_MWh or USD_per_kWh");
  }
  if (samples_.empty()) throw Error(ErrorCode::EmptySeries, "cost series '" + technology_ + "'");
  for (std::size_t i = 0; i < samples_.size(); ++i) {
    if (!(samples_[i].value > 0.0)) {
      throw Error(ErrorCode::NonPositiveValue, "cost series '" + technology_ + "' has cost " +
                                                   format_number(samples_[i].value));
    }
    if (axis_ == CostAxis::CumulativeGeneration && !(samples_[i].year > 0.0)) {
      throw Error(ErrorCode::NonPositiveX, "cost series '" + technology_ + "' has x " +
                                               format_number(samples_[i].year));
    }
    if (i > 0 && !(samples_[i].year > samples_[i - 1].year)) {
      throw Error(ErrorCode::DuplicateYear,
                  "cost series '" + technology_ + "' x values not strictly increasing");
    }
  }
}

CostSeries cost_by_year(const CapacitySeries& costs) {
  return CostSeries(costs.technology(), CostAxis::Year, costs.unit(),
                    {costs.samples().begin(), costs.samples().end()});
}

CostSeries join_cost_to_generation(const CostSeries& by_year, const TechnologyProfile& capacity) {
  std::vector<Sample> joined;
  for (const auto& s : by_year.samples()) {
    const auto* p = capacity.series().find(s.year);
    if (p == nullptr) {
      throw Error(ErrorCode::DatasetMissing, "no " + capacity.name() + " capacity for year " +
                                                 format_number(s.year));
    }
    joined.push_back({generation_capability(p->value, capacity.capacity_factor()), s.value});
  }
  return CostSeries(by_year.technology(), CostAxis::CumulativeGeneration, by_year.cost_unit(),
                    std::move(joined));
}

LearningCurveFit fit_learning_curve(const CostSeries& series) {
  const auto samples = series.samples();
  if (samples.size() < 2) {
    throw Error(ErrorCode::TooFewPoints, "learning curve needs >= 2 samples");
  }
  std::vector<double> lx;
  std::vector<double> lc;
  for (const auto& s : samples) {
    if (!(s.year > 0.0)) throw Error(ErrorCode::NonPositiveValue, "x must be positive");
    lx.push_back(std::log10(s.year));
    lc.push_back(std::log10(s.value));
  }
  const auto line = detail::least_squares_line(lx, lc, 0.0);
  LearningCurveFit fit;
  fit.log10_intercept = line.intercept;
  fit.log10_slope = line.slope;
  fit.rmse_log10 = std::sqrt(line.sse / static_cast<double>(samples.size()));
  fit.r_squared = line.sst > 0.0 ? std::max(0.0, 1.0 - line.sse / line.sst) : (line.sse == 0.0 ? 1.0 : 0.0);
  fit.x_min = samples.front().year;
  fit.x_max = samples.back().year;
  fit.axis = series.axis();
  return fit;
}

double learning_rate(const LearningCurveFit& fit) {
  if (fit.log10_slope > 0.0) {
    throw Error(ErrorCode::PositiveSlope, "cost rises with scale (slope " +
                                              format_number(fit.log10_slope) + ")");
  }
  return 1.0 - std::exp2(fit.log10_slope);
}

CostEstimate cost_at(const LearningCurveFit& fit, double x) {
  if (!(x > 0.0)) throw Error(ErrorCode::NonPositiveX, "x = " + format_number(x));
  const double cost = std::pow(10.0, fit.log10_intercept + fit.log10_slope * std::log10(x));
  return {cost, x < fit.x_min || x > fit.x_max, cost < kCostFloorUsdPerMWh};
}

CurveCrossing curve_crossing(const LearningCurveFit& a, const LearningCurveFit& b) {
  if (a.log10_slope == b.log10_slope) {
    throw Error(ErrorCode::ParallelLines, "learning curves have equal slopes");
  }
  const double log_x = (b.log10_intercept - a.log10_intercept) / (a.log10_slope - b.log10_slope);
  return {std::pow(10.0, log_x), std::pow(10.0, a.log10_intercept + a.log10_slope * log_x)};
}

double TimeDecayFit::cost_at(double year) const {
  return cost_at_reference * std::pow(annual_factor, year - reference_year);
}

TimeDecayFit fit_time_decay(const CostSeries& series) {
  const auto samples = series.samples();
  if (samples.size() < 2) throw Error(ErrorCode::TooFewPoints, "time decay needs >= 2 samples");
  std::vector<double> t;
  std::vector<double> lc;
  for (const auto& s : samples) {
    t.push_back(s.year);
    lc.push_back(std::log(s.value));
  }
  const auto line = detail::least_squares_line(t, lc, t.front());
  TimeDecayFit fit;
  fit.reference_year = t.front();
  fit.cost_at_reference = std::exp(line.intercept);
  fit.annual_factor = std::exp(line.slope);
  fit.r_squared = line.sst > 0.0 ? std::max(0.0, 1.0 - line.sse / line.sst) : (line.sse == 0.0 ? 1.0 : 0.0);
  fit.window = {t.front(), t.back()};
  return fit;
}

}  // namespace renewscen
