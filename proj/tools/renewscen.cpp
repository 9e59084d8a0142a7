#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "renewscen/error.hpp"
#include "renewscen/report/config.hpp"
#include "renewscen/report/figures.hpp"
#include "renewscen/report/report.hpp"

namespace fs = std::filesystem;
using namespace renewscen;

namespace {

std::string num(double v) { return format_number(v); }

void write_file(const fs::path& path, const std::string& text) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

const TechnologyProfile& profile(const ScenarioReport& r, const std::string& tech) {
  if (tech == "pv") return r.pv;
  if (tech == "wind") return r.headline_wind();
  if (tech == "offshore") return r.offshore;
  if (tech == "hydro") return r.hydro;
  throw Error(ErrorCode::ConfigInvalid, "unknown technology '" + tech + "' (pv, wind, offshore, hydro)");
}

void print_exponential(const std::string& label, const ExponentialFit& f) {
  fmt::print("{}: exponential over {}..{}\n", label, num(f.window.first), num(f.window.last));
  fmt::print("  reference_year  {}\n  ln_intercept    {}\n  growth_rate     {} per_year\n",
             num(f.reference_year), num(f.ln_intercept), num(f.ln_slope));
  if (f.ln_slope > 0) fmt::print("  doubling_time   {} year\n", num(doubling_time(f)));
  fmt::print("  r_squared       {}\n  rmse_log        {}\n  residual_signs  {}\n", num(f.r_squared),
             num(f.rmse), residual_sign_pattern(f));
}

void cmd_fit(const ScenarioReport& r, const std::string& tech) {
  if (tech == "wind") {
    const auto& w = r.wind_fits;
    print_exponential("wind full_range", w.full_range);
    print_exponential("wind regime", w.regime);
    fmt::print("wind piecewise: changepoint_year {} improvement_ratio {} regime_change {}\n",
               num(w.piecewise.changepoint_year), num(w.piecewise.improvement_ratio),
               w.regime_change ? "yes" : "no");
    print_exponential("  left", w.piecewise.left);
    print_exponential("  right", w.piecewise.right);
    return;
  }
  const auto& p = profile(r, tech);
  if (const auto* e = std::get_if<ExponentialFit>(&*p.model())) {
    print_exponential(tech, *e);
  } else if (const auto* poly = std::get_if<PolynomialFit>(&*p.model())) {
    fmt::print("{}: polynomial degree {} over {}..{}, reference_year {}\n", tech, poly->degree,
               num(poly->window.first), num(poly->window.last), num(poly->reference_year));
    for (std::size_t i = 0; i < poly->coefficients.size(); ++i)
      fmt::print("  c{}  {}\n", i, num(poly->coefficients[i]));
    fmt::print("  rmse  {} GW\n", num(poly->rmse));
  }
  if (tech == "offshore") fmt::print("  terawatt_year   {}\n", num(r.offshore_terawatt_year));
}

void cmd_project(const ScenarioReport& r, const std::string& tech, double year) {
  const auto& p = profile(r, tech);
  auto power = extrapolate(*p.model(), year);
  fmt::print("{} {}: installed_power {} GW, generation {} TWh_per_year (capacity factor {}){}\n",
             tech, num(year), num(power.value), num(p.generation_at(year)),
             num(p.capacity_factor()), power.horizon_warning ? " [beyond horizon warning]" : "");
}

void cmd_cross(const ScenarioReport& r, const std::string& threshold) {
  find_threshold(threshold);
  fmt::print("{:<15} {:<14} {:<16} {:<12} {}\n", "scenario", "wind", "status", "year", "level");
  for (const auto& c : r.crossings) {
    if (c.result.threshold != threshold) continue;
    fmt::print("{:<15} {:<14} {:<16} {:<12} {}\n", c.scenario, c.wind_treatment.empty() ? "-" : c.wind_treatment,
               to_string(c.result.status), c.result.year ? num(*c.result.year) : "-",
               num(c.result.level));
  }
}

void cmd_mix(const ScenarioReport& r, double year) {
  for (const auto& m : r.mixes) {
    if (m.year != year) continue;
    fmt::print("{} wind, {}: total {} TWh_per_year\n", m.wind_treatment, num(year), num(m.total));
    for (const auto& e : m.entries)
      fmt::print("  {:<6} {} TWh_per_year  {} percent\n", e.technology, num(e.generation),
                 num(e.share_percent));
  }
}

void cmd_learn(const ScenarioReport& r) {
  const auto& L = r.learning;
  for (auto [name, fit, rate] : {std::tuple{"pv", L.pv, L.pv_learning_rate},
                                 std::tuple{"wind", L.wind, L.wind_learning_rate}}) {
    fmt::print("{}: log10_slope {} log10_intercept {} learning_rate {} r_squared {}\n", name,
               num(fit.log10_slope), num(fit.log10_intercept), num(rate), num(fit.r_squared));
  }
  fmt::print("crossing: x {} TWh_per_year, cost {} USD_per_MWh\n", num(L.crossing.x),
             num(L.crossing.cost));
  fmt::print("pv cost at {} TWh_per_year: {} USD_per_MWh{}{}\n", num(L.pv_cost_probe),
             num(L.pv_cost_at_probe.cost), L.pv_cost_at_probe.extrapolated ? " (extrapolated)" : "",
             L.pv_cost_at_probe.below_floor ? " (below floor)" : "");
  fmt::print("annual cost factor: pv {} wind {} battery {}\n", num(L.pv_decay.annual_factor),
             num(L.wind_decay.annual_factor), num(L.battery_decay.annual_factor));
  fmt::print("battery pack cost {}: {} USD_per_kWh\n", num(L.battery_year), num(L.battery_cost));
}

void cmd_budget(const ScenarioReport& r) {
  for (const auto& a : r.budget.areas)
    fmt::print("demand {} TWh_per_year: PV area {} km2, desert fraction {}\n", num(a.demand),
               num(a.required_area), num(a.fraction));
  fmt::print("offshore potential at {} m: {} TWh_per_year\n\n",
             num(r.budget.offshore_depth.target_depth), num(r.budget.offshore_depth.extrapolated));
  std::fputs(emit_discrepancies(budget_discrepancies()).c_str(), stdout);
}

void cmd_report(const ScenarioReport& r, const fs::path& out) {
  write_file(out / "report.json", emit_json(r));
  write_file(out / "discrepancies.csv", emit_discrepancies(r));
  write_file(out / "crossings.csv", emit_crossings_csv(r));
  write_file(out / "mixes.csv", emit_mixes_csv(r));
  for (const auto& id : figure_ids()) write_file(out / "figures" / (id + ".svg"), emit_figure(r, id));
  fmt::print("wrote report.json, discrepancies.csv, crossings.csv, mixes.csv and {} figures to {}\n",
             figure_ids().size(), out.string());
  const std::string wt(to_string(r.config.wind_treatment));
  for (const auto& c : r.crossings) {
    if (!c.wind_treatment.empty() && c.wind_treatment != wt) continue;
    fmt::print("  {:<15} {:<22} {:<16} {}\n", c.scenario, c.result.threshold,
               to_string(c.result.status), c.result.year ? num(*c.result.year) : "-");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Renewable capacity growth scenarios: fits, crossings, budgets and charts"};
  app.require_subcommand(1);
  app.fallthrough();
  std::optional<std::string> config_path;
  std::optional<std::string> out_dir;
  std::optional<double> horizon;
  app.add_option("--config", config_path, "scenario config file");
  app.add_option("--out", out_dir, "output directory");
  app.add_option("--horizon", horizon, "last year searched for crossings");

  std::string tech;
  double year = 0;
  std::string threshold;
  std::optional<std::string> figure;
  auto* fit = app.add_subcommand("fit", "print the growth fit of one technology");
  fit->add_option("tech", tech, "pv, wind, offshore or hydro")->required();
  auto* project = app.add_subcommand("project", "installed power and generation at a year");
  project->add_option("tech", tech, "pv, wind, offshore or hydro")->required();
  project->add_option("--year", year)->required();
  auto* cross = app.add_subcommand("cross", "crossing years for one demand threshold");
  cross->add_option("--threshold", threshold)->required();
  auto* mix = app.add_subcommand("mix", "generation mix at a year");
  mix->add_option("--year", year)->required();
  auto* learn = app.add_subcommand("learn", "learning curves and cost decay");
  auto* budget = app.add_subcommand("budget", "area and potential budgets");
  auto* report = app.add_subcommand("report", "run everything and write all outputs");
  auto* figures = app.add_subcommand("figures", "write SVG charts");
  figures->add_option("--id", figure, "figure id; all figures when omitted");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    ScenarioConfig config = config_path ? load_config(*config_path) : ScenarioConfig{};
    if (out_dir) config.output_dir = *out_dir;
    if (horizon) config.horizon = *horizon;
    if (*mix && std::find(config.mix_years.begin(), config.mix_years.end(), year) == config.mix_years.end())
      config.mix_years.push_back(year);
    if (*figures && figure &&
        std::find(figure_ids().begin(), figure_ids().end(), *figure) == figure_ids().end()) {
      std::string valid;
      for (const auto& id : figure_ids()) valid += (valid.empty() ? "" : ", ") + id;
      throw Error(ErrorCode::MissingFit, "unknown figure '" + *figure + "'; valid ids: " + valid);
    }

    const ScenarioReport r = run_scenario(config);
    if (*fit) cmd_fit(r, tech);
    if (*project) cmd_project(r, tech, year);
    if (*cross) cmd_cross(r, threshold);
    if (*mix) cmd_mix(r, year);
    if (*learn) cmd_learn(r);
    if (*budget) cmd_budget(r);
    if (*report) cmd_report(r, config.output_dir);
    if (*figures) {
      for (const auto& id : figure_ids()) {
        if (figure && id != *figure) continue;
        auto path = config.output_dir / (id + ".svg");
        write_file(path, emit_figure(r, id));
        fmt::print("wrote {}\n", path.string());
      }
    }
  } catch (const Error& e) {
    fmt::print(stderr, "renewscen: {}\n", e.what());
    return exit_code(e.category());
  } catch (const std::exception& e) {
    fmt::print(stderr, "renewscen: {}\n", e.what());
    return 4;
  }
  return 0;
}
