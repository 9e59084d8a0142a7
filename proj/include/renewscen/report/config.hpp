#pragma once

#include <filesystem>
#include <iosfwd>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "renewscen/corpus/series.hpp"

namespace renewscen {

/// How the wind history is projected forward.
enum class WindTreatment {
  FullRange,     ///< one exponential over the whole history
  RightSegment,  ///< piecewise fit, projected from the post-changepoint segment
  Rebound,       ///< the early exponential regime continued
};

std::string_view to_string(WindTreatment treatment) noexcept;
WindTreatment parse_wind_treatment(std::string_view text);
const std::vector<WindTreatment>& all_wind_treatments();

inline constexpr double kOpenEnd = std::numeric_limits<double>::infinity();

struct TechnologyConfig {
  std::string dataset;  ///< bundled name or path to a series file
  std::optional<YearRange> window;
  std::optional<double> capacity_factor;
};

struct ScenarioConfig {
  std::filesystem::path data_dir = RENEWSCEN_DATA_DIR;
  std::filesystem::path output_dir = "renewscen-out";
  /// Relative dataset paths are resolved against this directory.
  std::filesystem::path base_dir = ".";

  TechnologyConfig pv{"pv_installed_power", YearRange{2000, kOpenEnd}, std::nullopt};
  TechnologyConfig wind{"wind_installed_power", std::nullopt, std::nullopt};
  TechnologyConfig offshore{"offshore_wind_installed_power", YearRange{2009, kOpenEnd}, std::nullopt};
  TechnologyConfig hydro{"hydro_installed_power", std::nullopt, std::nullopt};
  int hydro_degree = 2;

  WindTreatment wind_treatment = WindTreatment::FullRange;
  YearRange wind_regime_window{1996, 2009};
  double changepoint_threshold = 0.5;
  std::size_t changepoint_min_segment = 3;

  std::string lcoe_pv = "lcoe_pv";
  std::string lcoe_wind = "lcoe_wind";
  std::string battery = "battery_pack_cost";
  std::string offshore_depth = "offshore_depth_areas";

  std::vector<std::string> thresholds{"electric_2026", "electric_2030", "reduced_primary_2030",
                                      "primary_2030", "primary_2032"};
  std::vector<double> mix_years{2025, 2030};
  double horizon = 2050;
};

/// Flat "key = value" text, '#' starts a comment. Unknown keys and malformed
/// values are Error(ConfigInvalid).
ScenarioConfig parse_config(std::istream& in, const std::filesystem::path& base_dir = ".");
ScenarioConfig load_config(const std::filesystem::path& path);

/// Bundled names map to data_dir/<name>.csv; anything containing a '/' or
/// ending in ".csv" is a path. Error(DatasetMissing) if the file is absent.
std::filesystem::path resolve_dataset(const ScenarioConfig& config, const std::string& name);

/// The config as "key = value" lines in canonical order; parses back to an
/// equal config.
std::string format_config(const ScenarioConfig& config);

}  // namespace renewscen
