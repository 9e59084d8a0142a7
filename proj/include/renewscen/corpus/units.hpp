#pragma once

#include <optional>
#include <string_view>

namespace renewscen {

/// Canonical units. Everything inside the engine is expressed in one of these;
/// other spellings are converted when a series is loaded.
enum class Unit { GW, TWhPerYear, USDPerMWh, USDPerKWh };

enum class QuantityKind { InstalledPower, AnnualGeneration, UnitCost };

std::string_view to_string(Unit unit) noexcept;
std::string_view to_string(QuantityKind kind) noexcept;

std::optional<QuantityKind> parse_quantity_kind(std::string_view text) noexcept;

/// A unit as written in a file, resolved to its canonical unit and the factor
/// that converts a value in the written unit into the canonical one.
struct UnitSpelling {
  Unit canonical;
  double to_canonical;
};

/// Accepts the canonical names plus MW, TW, GWh_per_year.
std::optional<UnitSpelling> parse_unit(std::string_view text) noexcept;

/// True when `unit` is a legal unit for `kind` (e.g. GW for installed power).
bool unit_matches_kind(Unit unit, QuantityKind kind) noexcept;

}  // namespace renewscen
