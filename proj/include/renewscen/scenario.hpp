#pragma once

#include <optional>
#include <string>
#include <vector>

#include "renewscen/genconvert.hpp"

namespace renewscen {

/// Sum of the generation capabilities of several technologies.
class CombinedProjection {
 public:
  /// Every profile must carry a growth model.
  explicit CombinedProjection(std::vector<TechnologyProfile> components);

  const std::vector<TechnologyProfile>& components() const noexcept { return components_; }

  /// Latest fit-window start among the components: the first year at which
  /// every component can be evaluated.
  double start_year() const noexcept { return start_year_; }

  /// Total generation capability, TWh/yr.
  double evaluate(double year) const;

 private:
  std::vector<TechnologyProfile> components_;
  double start_year_ = 0.0;
};

/// Throws Error(EmptyCombination) for an empty list.
CombinedProjection combine(std::vector<TechnologyProfile> profiles);

struct DemandThreshold {
  std::string name;
  double level = 0.0;  ///< TWh/yr
  double reference_year = 0.0;
  std::string citation;
};

/// The five registered demand levels (2030 electric/primary/reduced primary
/// and the 2026/2032 threshold lines).
std::vector<DemandThreshold> registered_thresholds();

/// Throws Error(ConfigInvalid) for an unknown name.
DemandThreshold find_threshold(const std::string& name);

enum class CrossingStatus { Crossed, AlreadySatisfied, NotReached };

std::string_view to_string(CrossingStatus status) noexcept;

struct CrossingResult {
  std::string threshold;
  double level = 0.0;
  CrossingStatus status = CrossingStatus::NotReached;
  /// Crossing year when Crossed; the search start when AlreadySatisfied.
  std::optional<double> year;
  double start = 0.0;
  double horizon = 0.0;
};

inline constexpr double kDefaultHorizon = 2050.0;
inline constexpr double kCrossingYearTolerance = 1e-6;
inline constexpr double kMonotoneGridStep = 0.1;

/// First year in [start, horizon] where the projection reaches the threshold
/// level. The projection is sampled on a 0.1-yr grid first and must be
/// nondecreasing there, otherwise Error(NonMonotoneProjection).
CrossingResult crossing_year(const CombinedProjection& projection, const DemandThreshold& threshold,
                             double horizon = kDefaultHorizon,
                             std::optional<double> start = std::nullopt);

struct MixEntry {
  std::string technology;
  double generation = 0.0;  ///< TWh/yr
  double share_percent = 0.0;
};

/// Per-technology generation and percentage shares at `year`.
std::vector<MixEntry> mix_at_year(const CombinedProjection& projection, double year);

/// Year at which two single-exponential generation projections are equal.
/// Throws Error(ParallelGrowth) for equal growth rates, Error(MissingFit)
/// unless both profiles carry an ExponentialFit.
double pv_wind_generation_crossover(const TechnologyProfile& pv, const TechnologyProfile& wind);

}  // namespace renewscen
