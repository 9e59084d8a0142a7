#include "renewscen/genconvert.hpp"

#include <utility>

#include "renewscen/error.hpp"

namespace renewscen {

namespace {

constexpr double kHoursPerYear = 8760.0;

void check_capacity_factor(double cf) {
  if (!(cf > 0.0 && cf <= 1.0)) {
    throw Error(ErrorCode::CapacityFactorOutOfRange,
                "capacity factor " + format_number(cf) + " outside (0, 1]");
  }
}

}  // namespace

TechnologyProfile::TechnologyProfile(std::string name, double capacity_factor,
                                     CapacitySeries series, std::optional<GrowthModel> model)
    : name_(std::move(name)),
      capacity_factor_(capacity_factor),
      series_(std::move(series)),
      model_(std::move(model)) {
  check_capacity_factor(capacity_factor_);
}

double TechnologyProfile::generation_at(double year) const {
  if (!model_) throw Error(ErrorCode::MissingFit, "profile '" + name_ + "' has no growth model");
  return generation_capability(extrapolate(*model_, year).value, capacity_factor_);
}

double generation_capability(double power_gw, double capacity_factor) {
  check_capacity_factor(capacity_factor);
  return power_gw * capacity_factor * kHoursPerYear / 1000.0;
}

double power_required(double generation_twh_per_year, double capacity_factor) {
  check_capacity_factor(capacity_factor);
  return generation_twh_per_year * 1000.0 / (capacity_factor * kHoursPerYear);
}

GenerationSeries series_to_generation(const TechnologyProfile& profile) {
  GenerationSeries out{profile.name(), {}};
  out.samples.reserve(profile.series().size());
  for (const auto& s : profile.series().samples()) {
    out.samples.push_back({s.year, generation_capability(s.value, profile.capacity_factor())});
  }
  return out;
}

}  // namespace renewscen
