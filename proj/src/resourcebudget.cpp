#include "renewscen/resourcebudget.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "renewscen/corpus/constants.hpp"
#include "renewscen/corpus/series.hpp"
#include "renewscen/error.hpp"
#include "renewscen/growthfit.hpp"

namespace renewscen {

namespace {

double constant(std::string_view name) { return get_constant(name).value; }

}  // namespace

ResourcePotential registered_potential(const std::string& name) {
  struct Entry {
    const char* name;
    const char* constant;
    const char* qualifier;
  };
  static constexpr Entry kEntries[] = {
      {"onshore", "onshore_wind_potential", "onshore"},
      {"offshore_200m", "offshore_200m", "offshore, water depth < 200 m"},
      {"offshore_1000m", "offshore_1000m", "offshore, water depth < 1000 m"},
      {"wind_total_as_stated", "wind_total_potential_as_stated", "onshore + offshore, as stated"},
  };
  for (const auto& e : kEntries) {
    if (name == e.name) {
      const auto& c = get_constant(e.constant);
      return {e.name, c.value, e.qualifier, std::string(c.citation)};
    }
  }
  throw Error(ErrorCode::UnknownConstant, "no potential named '" + name + "'");
}

double pv_area_required(double demand_twh_per_year, double density_mw_per_km2,
                        double capacity_factor) {
  if (!(capacity_factor > 0.0 && capacity_factor <= 1.0)) {
    throw Error(ErrorCode::CapacityFactorOutOfRange, format_number(capacity_factor));
  }
  if (!(density_mw_per_km2 > 0.0)) {
    throw Error(ErrorCode::NonPositiveDensity, format_number(density_mw_per_km2));
  }
  if (!(demand_twh_per_year >= 0.0)) {
    throw Error(ErrorCode::NegativeDemand, format_number(demand_twh_per_year));
  }
  // TWh -> MWh over MWh per km2 per year.
  return demand_twh_per_year * 1e6 /
         (density_mw_per_km2 * capacity_factor * constant("hours_per_year"));
}

double desert_fraction(double area_km2) { return area_km2 / constant("desert_area"); }

AreaBudget pv_desert_budget(double demand_twh_per_year) {
  AreaBudget b;
  b.demand = demand_twh_per_year;
  b.density = constant("pv_density");
  b.capacity_factor = constant("cf_pv");
  b.required_area = pv_area_required(b.demand, b.density, b.capacity_factor);
  b.reference_area = constant("desert_area");
  b.fraction = b.required_area / b.reference_area;
  return b;
}

PotentialShare potential_fraction(double demand_twh_per_year, const ResourcePotential& potential) {
  if (!(demand_twh_per_year >= 0.0)) {
    throw Error(ErrorCode::NegativeDemand, format_number(demand_twh_per_year));
  }
  const double p = potential.annual_potential;
  return {demand_twh_per_year / p, demand_twh_per_year > 0.0
                                       ? p / demand_twh_per_year
                                       : std::numeric_limits<double>::infinity()};
}

double offshore_depth_extrapolation(std::span<const AreaPotentialPoint> points, double target_area) {
  if (points.size() < 2) throw Error(ErrorCode::TooFewPoints, "need >= 2 area/potential points");
  std::vector<double> x;
  std::vector<double> y;
  for (const auto& p : points) {
    if (!(p.area > 0.0) || !(p.potential > 0.0)) {
      throw Error(ErrorCode::NonPositiveValue, "area and potential must be positive");
    }
    x.push_back(p.area);
    y.push_back(p.potential);
  }
  const auto line = detail::least_squares_line(x, y, 0.0);
  return line.intercept + line.slope * target_area;
}

double Discrepancy::deviation() const noexcept { return (stated - computed) / computed; }

double Discrepancy::abs_difference() const noexcept { return std::abs(stated - computed); }

std::vector<Discrepancy> budget_discrepancies() {
  const double electric = constant("electric_demand_2030");
  const double electric_2026 = constant("electric_threshold_2026");
  const double primary = constant("primary_demand_2030");
  const double reduced = constant("reduced_primary_2030");
  const double desert = constant("desert_area");
  const double wind_total = constant("wind_total_potential_as_stated");
  const double onshore = constant("onshore_wind_potential");
  const double off1000 = constant("offshore_1000m");
  const double off50 = constant("offshore_50m");

  const double area_electric = pv_desert_budget(electric).required_area;
  const double area_primary = pv_desert_budget(primary).required_area;
  const double area_reduced = pv_desert_budget(reduced).required_area;
  const double stated_area_electric = 357667.0;
  const double stated_area_primary = 2.015e6;
  const char* kSource = "published PV area and wind share estimates";

  std::vector<Discrepancy> rows{
      {"reduced_primary_2030", "reduced primary demand = 186,000 x (1 - 0.425)", reduced,
       reduced_primary(primary), "TWh_per_year", kSource},
      {"pv_area_electric_2030", "PV plant area for 35,000 TWh/yr electric demand",
       stated_area_electric, area_electric, "km2", kSource},
      {"pv_area_electric_2026_demand", "PV plant area recomputed with 33,000 TWh/yr instead",
       stated_area_electric, pv_desert_budget(electric_2026).required_area, "km2", kSource},
      {"pv_area_primary_2030", "PV plant area for 186,000 TWh/yr primary demand",
       stated_area_primary, area_primary, "km2", kSource},
      {"desert_share_electric", "desert share for electric demand (recomputed area)", 1.21,
       100.0 * area_electric / desert, "percent", kSource},
      {"desert_share_electric_stated_area", "desert share from the stated 357,667 km2", 1.21,
       100.0 * stated_area_electric / desert, "percent", kSource},
      {"desert_share_primary", "desert share for primary demand (recomputed area)", 6.83,
       100.0 * area_primary / desert, "percent", kSource},
      {"desert_share_primary_stated_area", "desert share from the stated 2.015 million km2", 6.83,
       100.0 * stated_area_primary / desert, "percent", kSource},
      {"desert_share_reduced_primary", "desert share for reduced primary demand", 3.93,
       100.0 * area_reduced / desert, "percent", kSource},
      {"wind_share_electric", "wind potential share for electric demand (denominator 301,775)",
       11.59, 100.0 * electric / wind_total, "percent", kSource},
      {"wind_share_primary", "wind potential share for primary demand (denominator 301,775)",
       61.63, 100.0 * primary / wind_total, "percent", kSource},
      {"wind_share_reduced_primary", "wind potential share for reduced primary demand", 35.44,
       100.0 * reduced / wind_total, "percent", kSource},
      {"wind_total_potential", "stated total vs onshore 690,000 + offshore 301,085", wind_total,
       onshore + off1000, "TWh_per_year", kSource},
      {"onshore_times_over_primary", "onshore potential / 2030 primary demand", 3.7,
       onshore / primary, "ratio", "onshore wind discussion"},
      {"onshore_times_over_electric", "onshore potential / 2030 electric demand", 19.9,
       onshore / electric, "ratio", "onshore wind discussion"},
      {"offshore_50m_times_over_electric", "offshore <50 m potential / 2030 electric demand", 2.64,
       off50 / electric, "ratio", "offshore wind discussion"},
      {"offshore_1000m_times_over_primary", "offshore <1000 m potential / 2030 primary demand", 1.6,
       off1000 / primary, "ratio", "offshore wind discussion"},
  };
  std::sort(rows.begin(), rows.end(),
            [](const Discrepancy& a, const Discrepancy& b) { return a.id < b.id; });
  return rows;
}

}  // namespace renewscen
