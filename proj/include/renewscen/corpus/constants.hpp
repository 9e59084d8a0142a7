#pragma once

#include <span>
#include <string_view>

namespace renewscen {

/// A fixed published number with the unit it is stated in and where it comes from.
struct Constant {
  std::string_view name;
  double value;
  std::string_view unit;
  std::string_view citation;
};

/// Read-only table of every fixed input the scenario engine uses. Values are the
/// literals as published; nothing here is derived.
class ConstantsRegistry {
 public:
  static const ConstantsRegistry& instance() noexcept;

  /// Throws Error(UnknownConstant).
  const Constant& get(std::string_view name) const;
  double value(std::string_view name) const { return get(name).value; }
  bool contains(std::string_view name) const noexcept;
  std::span<const Constant> all() const noexcept;

 private:
  ConstantsRegistry() = default;
};

inline const Constant& get_constant(std::string_view name) {
  return ConstantsRegistry::instance().get(name);
}

/// Primary demand after the efficiency gain of full electrification:
/// demand * (1 - efficiency_reduction). Throws Error(NegativeDemand).
double reduced_primary(double demand_twh_per_year);

}  // namespace renewscen
