#include "renewscen/report/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include <fmt/format.h>

#include "renewscen/error.hpp"
#include "renewscen/scenario.hpp"

namespace renewscen {

std::string_view to_string(WindTreatment treatment) noexcept {
  switch (treatment) {
    case WindTreatment::FullRange: return "full_range";
    case WindTreatment::RightSegment: return "right_segment";
    case WindTreatment::Rebound: return "rebound";
  }
  return "unknown";
}

WindTreatment parse_wind_treatment(std::string_view text) {
  for (auto t : all_wind_treatments())
    if (to_string(t) == text) return t;
  throw Error(ErrorCode::ConfigInvalid,
              fmt::format("unknown wind treatment '{}' (full_range, right_segment, rebound)", text));
}

const std::vector<WindTreatment>& all_wind_treatments() {
  static const std::vector<WindTreatment> all{WindTreatment::FullRange, WindTreatment::RightSegment,
                                              WindTreatment::Rebound};
  return all;
}

namespace {

std::string_view trim(std::string_view s) {
  const auto* ws = " \t\r";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

[[noreturn]] void invalid(std::string_view key, std::string_view value, std::string_view what) {
  throw Error(ErrorCode::ConfigInvalid, fmt::format("{} = '{}': {}", key, value, what));
}

double parse_double(std::string_view key, std::string_view text) {
  double v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size() || !std::isfinite(v))
    invalid(key, text, "expected a number");
  return v;
}

std::vector<std::string_view> split_list(std::string_view text) {
  std::vector<std::string_view> out;
  while (!text.empty()) {
    auto comma = text.find(',');
    auto item = trim(text.substr(0, comma));
    if (!item.empty()) out.push_back(item);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

// "2000..2020", "2000.." or "..2009".
YearRange parse_window(std::string_view key, std::string_view text) {
  auto dots = text.find("..");
  if (dots == std::string_view::npos) invalid(key, text, "expected FIRST..LAST");
  auto lo = trim(text.substr(0, dots));
  auto hi = trim(text.substr(dots + 2));
  YearRange r{-kOpenEnd, kOpenEnd};
  if (!lo.empty()) r.first = parse_double(key, lo);
  if (!hi.empty()) r.last = parse_double(key, hi);
  if (r.first > r.last) invalid(key, text, "empty window");
  return r;
}

std::string format_window(const YearRange& r) {
  std::string out;
  if (std::isfinite(r.first)) out += format_number(r.first);
  out += "..";
  if (std::isfinite(r.last)) out += format_number(r.last);
  return out;
}

double parse_capacity_factor(std::string_view key, std::string_view text) {
  double cf = parse_double(key, text);
  if (!(cf > 0.0 && cf <= 1.0)) invalid(key, text, "capacity factor must lie in (0, 1]");
  return cf;
}

using Setter = std::function<void(ScenarioConfig&, std::string_view key, std::string_view value)>;

void add_technology_keys(std::map<std::string, Setter, std::less<>>& keys, const std::string& prefix,
                         TechnologyConfig ScenarioConfig::*member) {
  keys[prefix + ".dataset"] = [member](ScenarioConfig& c, auto, auto v) {
    (c.*member).dataset = std::string(v);
  };
  keys[prefix + ".window"] = [member](ScenarioConfig& c, auto k, auto v) {
    (c.*member).window = parse_window(k, v);
  };
  keys[prefix + ".capacity_factor"] = [member](ScenarioConfig& c, auto k, auto v) {
    (c.*member).capacity_factor = parse_capacity_factor(k, v);
  };
}

const std::map<std::string, Setter, std::less<>>& setters() {
  static const auto table = [] {
    std::map<std::string, Setter, std::less<>> keys;
    keys["data_dir"] = [](ScenarioConfig& c, auto, auto v) { c.data_dir = std::string(v); };
    keys["output_dir"] = [](ScenarioConfig& c, auto, auto v) { c.output_dir = std::string(v); };
    keys["horizon"] = [](ScenarioConfig& c, auto k, auto v) { c.horizon = parse_double(k, v); };
    keys["thresholds"] = [](ScenarioConfig& c, auto, auto v) {
      c.thresholds.clear();
      for (auto name : split_list(v)) {
        find_threshold(std::string(name));
        c.thresholds.emplace_back(name);
      }
    };
    keys["mix_years"] = [](ScenarioConfig& c, auto k, auto v) {
      c.mix_years.clear();
      for (auto y : split_list(v)) c.mix_years.push_back(parse_double(k, y));
    };
    add_technology_keys(keys, "pv", &ScenarioConfig::pv);
    add_technology_keys(keys, "wind", &ScenarioConfig::wind);
    add_technology_keys(keys, "offshore", &ScenarioConfig::offshore);
    add_technology_keys(keys, "hydro", &ScenarioConfig::hydro);
    keys["hydro.degree"] = [](ScenarioConfig& c, auto k, auto v) {
      double d = parse_double(k, v);
      if (d < 1 || d > 6 || d != std::floor(d)) invalid(k, v, "degree must be an integer in 1..6");
      c.hydro_degree = static_cast<int>(d);
    };
    keys["wind.treatment"] = [](ScenarioConfig& c, auto, auto v) {
      c.wind_treatment = parse_wind_treatment(v);
    };
    keys["wind.regime_window"] = [](ScenarioConfig& c, auto k, auto v) {
      c.wind_regime_window = parse_window(k, v);
    };
    keys["changepoint.threshold"] = [](ScenarioConfig& c, auto k, auto v) {
      c.changepoint_threshold = parse_double(k, v);
    };
    keys["changepoint.min_segment"] = [](ScenarioConfig& c, auto k, auto v) {
      double d = parse_double(k, v);
      if (d < 2 || d != std::floor(d)) invalid(k, v, "expected an integer >= 2");
      c.changepoint_min_segment = static_cast<std::size_t>(d);
    };
    keys["lcoe.pv"] = [](ScenarioConfig& c, auto, auto v) { c.lcoe_pv = std::string(v); };
    keys["lcoe.wind"] = [](ScenarioConfig& c, auto, auto v) { c.lcoe_wind = std::string(v); };
    keys["battery.dataset"] = [](ScenarioConfig& c, auto, auto v) { c.battery = std::string(v); };
    keys["offshore_depth.dataset"] = [](ScenarioConfig& c, auto, auto v) {
      c.offshore_depth = std::string(v);
    };
    return keys;
  }();
  return table;
}

}  // namespace

ScenarioConfig parse_config(std::istream& in, const std::filesystem::path& base_dir) {
  ScenarioConfig config;
  config.base_dir = base_dir;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view view = line;
    if (auto hash = view.find('#'); hash != std::string_view::npos) view = view.substr(0, hash);
    view = trim(view);
    if (view.empty()) continue;
    auto eq = view.find('=');
    if (eq == std::string_view::npos)
      throw Error(ErrorCode::ConfigInvalid, fmt::format("line {}: expected key = value", lineno));
    auto key = trim(view.substr(0, eq));
    auto value = trim(view.substr(eq + 1));
    if (value.size() >= 2 && value.front() == '"' && value.back() == '"')
      value = value.substr(1, value.size() - 2);
    auto it = setters().find(key);
    if (it == setters().end())
      throw Error(ErrorCode::ConfigInvalid, fmt::format("line {}: unknown key '{}'", lineno, key));
    it->second(config, key, value);
  }
  if (!std::isfinite(config.horizon))
    throw Error(ErrorCode::ConfigInvalid, "horizon must be finite");
  return config;
}

ScenarioConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ConfigInvalid, fmt::format("cannot open config {}", path.string()));
  auto base = path.parent_path();
  auto config = parse_config(in, base.empty() ? std::filesystem::path(".") : base);
  if (config.data_dir.is_relative()) config.data_dir = config.base_dir / config.data_dir;
  return config;
}

std::filesystem::path resolve_dataset(const ScenarioConfig& config, const std::string& name) {
  std::filesystem::path path;
  bool is_path = name.find('/') != std::string::npos ||
                 (name.size() > 4 && name.compare(name.size() - 4, 4, ".csv") == 0);
  if (is_path) {
    path = name;
    if (path.is_relative()) path = config.base_dir / path;
  } else {
    path = config.data_dir / (name + ".csv");
  }
  if (!std::filesystem::is_regular_file(path))
    throw Error(ErrorCode::DatasetMissing,
                fmt::format("dataset '{}' not found at {}", name, path.string()));
  return path;
}

std::string format_config(const ScenarioConfig& c) {
  std::ostringstream out;
  auto line = [&](std::string_view key, const std::string& value) {
    out << key << " = " << value << '\n';
  };
  auto tech = [&](const std::string& prefix, const TechnologyConfig& t) {
    line(prefix + ".dataset", t.dataset);
    if (t.window) line(prefix + ".window", format_window(*t.window));
    if (t.capacity_factor) line(prefix + ".capacity_factor", format_number(*t.capacity_factor));
  };
  line("data_dir", c.data_dir.string());
  line("output_dir", c.output_dir.string());
  line("horizon", format_number(c.horizon));
  std::string list;
  for (const auto& t : c.thresholds) list += (list.empty() ? "" : ", ") + t;
  line("thresholds", list);
  list.clear();
  for (double y : c.mix_years) list += (list.empty() ? "" : ", ") + format_number(y);
  line("mix_years", list);
  tech("pv", c.pv);
  tech("wind", c.wind);
  line("wind.treatment", std::string(to_string(c.wind_treatment)));
  line("wind.regime_window", format_window(c.wind_regime_window));
  tech("offshore", c.offshore);
  tech("hydro", c.hydro);
  line("hydro.degree", std::to_string(c.hydro_degree));
  line("changepoint.threshold", format_number(c.changepoint_threshold));
  line("changepoint.min_segment", std::to_string(c.changepoint_min_segment));
  line("lcoe.pv", c.lcoe_pv);
  line("lcoe.wind", c.lcoe_wind);
  line("battery.dataset", c.battery);
  line("offshore_depth.dataset", c.offshore_depth);
  return out.str();
}

}  // namespace renewscen
