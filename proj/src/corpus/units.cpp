#include "renewscen/corpus/units.hpp"

namespace renewscen {

std::string_view to_string(Unit unit) noexcept {
  switch (unit) {
    case Unit::GW: return "GW";
    case Unit::TWhPerYear: return "TWh_per_year";
    case Unit::USDPerMWh: return "USD_per_MWh";
    case Unit::USDPerKWh: return "USD_per_kWh";
  }
  return "?";
}

std::string_view to_string(QuantityKind kind) noexcept {
  switch (kind) {
    case QuantityKind::InstalledPower: return "installed_power";
    case QuantityKind::AnnualGeneration: return "annual_generation";
    case QuantityKind::UnitCost: return "unit_cost";
  }
  return "?";
}

std::optional<QuantityKind> parse_quantity_kind(std::string_view text) noexcept {
  if (text == "installed_power") return QuantityKind::InstalledPower;
  if (text == "annual_generation") return QuantityKind::AnnualGeneration;
  if (text == "unit_cost") return QuantityKind::UnitCost;
  return std::nullopt;
}

std::optional<UnitSpelling> parse_unit(std::string_view text) noexcept {
  if (text == "GW") return UnitSpelling{Unit::GW, 1.0};
  if (text == "MW") return UnitSpelling{Unit::GW, 1e-3};
  if (text == "TW") return UnitSpelling{Unit::GW, 1e3};
  if (text == "TWh_per_year") return UnitSpelling{Unit::TWhPerYear, 1.0};
  if (text == "GWh_per_year") return UnitSpelling{Unit::TWhPerYear, 1e-3};
  if (text == "USD_per_MWh") return UnitSpelling{Unit::USDPerMWh, 1.0};
  if (text == "USD_per_kWh") return UnitSpelling{Unit::USDPerKWh, 1.0};
  return std::nullopt;
}

bool unit_matches_kind(Unit unit, QuantityKind kind) noexcept {
  switch (kind) {
    case QuantityKind::InstalledPower: return unit == Unit::GW;
    case QuantityKind::AnnualGeneration: return unit == Unit::TWhPerYear;
    case QuantityKind::UnitCost: return unit == Unit::USDPerMWh || unit == Unit::USDPerKWh;
  }
  return false;
}

}  // namespace renewscen
