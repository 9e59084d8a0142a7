#include "renewscen/corpus/constants.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "renewscen/error.hpp"

namespace renewscen {

namespace {

// clang-format off
constexpr std::array kConstants{
  Constant{"electric_demand_2030", 35000.0, "TWh_per_year",
           "Schalk 2019 forecast: electric energy demand in 2030"},
  Constant{"primary_demand_2030", 186000.0, "TWh_per_year",
           "Schalk 2019 forecast: primary energy demand in 2030"},
  Constant{"reduced_primary_2030", 106950.0, "TWh_per_year",
           "primary demand in 2030 reduced by 42.5% efficiency gain (Jacobson et al. 2017)"},
  Constant{"electric_threshold_2026", 33000.0, "TWh_per_year",
           "Schalk 2019 forecast: electric energy consumption in 2026 (lower threshold line)"},
  Constant{"primary_threshold_2032", 198000.0, "TWh_per_year",
           "Schalk 2019 forecast: primary energy consumption in 2032 (upper threshold line)"},
  Constant{"efficiency_reduction", 0.425, "fraction",
           "reduced primary consumption under 100% renewable supply (Jacobson et al. 2017)"},
  Constant{"cf_pv", 0.256, "fraction",
           "EIA 2020: average US PV capacity factor, 2017 data"},
  Constant{"cf_wind", 0.354, "fraction",
           "EIA 2020: average wind capacity factor"},
  Constant{"cf_hydro", 0.43, "fraction",
           "average hydropower capacity factor applied to IHA 2020 capacity"},
  Constant{"pv_density", 42.8, "MW_per_km2",
           "average peak power per area of large utility PV plants (Wikipedia 2020 plant list)"},
  Constant{"desert_area", 34.93e6, "km2",
           "global desert area excluding Antarctica (Wikipedia 2021c)"},
  Constant{"onshore_wind_potential", 690000.0, "TWh_per_year",
           "Lu et al. 2009: onshore wind power potential"},
  Constant{"offshore_20m", 41200.0, "TWh_per_year",
           "Arent et al. 2012: offshore wind potential up to 20 m depth"},
  Constant{"offshore_50m", 92500.0, "TWh_per_year",
           "Arent et al. 2012: offshore wind potential up to 50 m depth"},
  Constant{"offshore_200m", 192000.0, "TWh_per_year",
           "Arent et al. 2012: offshore potential below 200 m with floating turbines"},
  Constant{"offshore_1000m", 301085.0, "TWh_per_year",
           "Kausche et al. 2018: offshore potential below 1000 m, extrapolated with available sea space"},
  Constant{"wind_total_potential_as_stated", 301775.0, "TWh_per_year",
           "onshore and offshore total potential as stated (inconsistent with 690,000 + 301,085)"},
  Constant{"hydro_developed_potential_as_stated", 6.5, "TWh_per_year",
           "Mariusson and Thorsteinsson 1997: developed hydropower generation potential, unit as stated"},
  Constant{"hydro_exploitable_potential_as_stated", 10.5, "TWh_per_year",
           "Mariusson and Thorsteinsson 1997: exploitable hydropower generation potential, unit as stated"},
  Constant{"hours_per_year", 8760.0, "h",
           "hours in a non-leap year"},
};
// clang-format on

}  // namespace

const ConstantsRegistry& ConstantsRegistry::instance() noexcept {
  static const ConstantsRegistry registry;
  return registry;
}

const Constant& ConstantsRegistry::get(std::string_view name) const {
  auto it = std::find_if(kConstants.begin(), kConstants.end(),
                         [&](const Constant& c) { return c.name == name; });
  if (it == kConstants.end()) throw Error(ErrorCode::UnknownConstant, std::string(name));
  return *it;
}

bool ConstantsRegistry::contains(std::string_view name) const noexcept {
  return std::any_of(kConstants.begin(), kConstants.end(),
                     [&](const Constant& c) { return c.name == name; });
}

std::span<const Constant> ConstantsRegistry::all() const noexcept { return kConstants; }

double reduced_primary(double demand_twh_per_year) {
  if (!(demand_twh_per_year >= 0.0)) {
    throw Error(ErrorCode::NegativeDemand, "demand must be >= 0");
  }
  return demand_twh_per_year - demand_twh_per_year * get_constant("efficiency_reduction").value;
}

}  // namespace renewscen
