#pragma once

#include <span>
#include <string>
#include <vector>

namespace renewscen {

struct ResourcePotential {
  std::string name;
  double annual_potential = 0.0;  ///< TWh/yr
  std::string qualifier;
  std::string citation;
};

/// Registered wind potentials: onshore, offshore <200 m, offshore <1000 m and
/// the stated onshore+offshore total.
ResourcePotential registered_potential(const std::string& name);

struct AreaBudget {
  double demand = 0.0;          ///< TWh/yr
  double density = 0.0;         ///< MW/km2
  double capacity_factor = 0.0;
  double required_area = 0.0;   ///< km2
  double reference_area = 0.0;  ///< km2
  double fraction = 0.0;
};

/// demand * 1e6 / (density * cf * 8760), km2.
double pv_area_required(double demand_twh_per_year, double density_mw_per_km2,
                        double capacity_factor);

/// Area as a fraction of the registered global desert area.
double desert_fraction(double area_km2);

AreaBudget pv_desert_budget(double demand_twh_per_year);

struct PotentialShare {
  double fraction;    ///< demand / potential
  double times_over;  ///< potential / demand, +inf for zero demand
};

PotentialShare potential_fraction(double demand_twh_per_year, const ResourcePotential& potential);

struct AreaPotentialPoint {
  double area;       ///< available sea area proxy
  double potential;  ///< TWh/yr
};

/// Linear least squares of potential on available area, evaluated at target_area.
double offshore_depth_extrapolation(std::span<const AreaPotentialPoint> points, double target_area);

/// A published number next to an independent recomputation from registered
/// inputs. deviation = (stated - computed) / computed.
struct Discrepancy {
  std::string id;
  std::string description;
  double stated = 0.0;
  double computed = 0.0;
  std::string unit;
  std::string source;

  double deviation() const noexcept;
  double abs_difference() const noexcept;
};

/// Every published area, fraction and potential literal,
/// recomputed from the registry. Deterministic order (by id).
std::vector<Discrepancy> budget_discrepancies();

}  // namespace renewscen
