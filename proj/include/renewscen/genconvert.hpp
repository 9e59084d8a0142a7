#pragma once

#include <optional>
#include <string>
#include <vector>

#include "renewscen/corpus/series.hpp"
#include "renewscen/growthfit.hpp"

namespace renewscen {

/// A technology with its global average capacity factor, the installed-power
/// history it was fitted on and, optionally, the fitted growth model.
class TechnologyProfile {
 public:
  /// Throws Error(CapacityFactorOutOfRange) unless 0 < capacity_factor <= 1.
  TechnologyProfile(std::string name, double capacity_factor, CapacitySeries series,
                    std::optional<GrowthModel> model = std::nullopt);

  const std::string& name() const noexcept { return name_; }
  double capacity_factor() const noexcept { return capacity_factor_; }
  const CapacitySeries& series() const noexcept { return series_; }
  const std::optional<GrowthModel>& model() const noexcept { return model_; }

  /// Projected generation capability (TWh/yr) at `year`; needs a model.
  double generation_at(double year) const;

 private:
  std::string name_;
  double capacity_factor_;
  CapacitySeries series_;
  std::optional<GrowthModel> model_;
};

struct GenerationSeries {
  std::string technology;
  std::vector<Sample> samples;  ///< (year, TWh/yr)
};

/// power [GW] * capacity_factor * 8760 h / 1000 -> TWh/yr.
double generation_capability(double power_gw, double capacity_factor);

/// Installed power [GW] that yields `generation` TWh/yr at `capacity_factor`.
double power_required(double generation_twh_per_year, double capacity_factor);

GenerationSeries series_to_generation(const TechnologyProfile& profile);

}  // namespace renewscen
