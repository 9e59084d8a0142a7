#include "renewscen/report/report.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include <fmt/format.h>

#include "renewscen/corpus/constants.hpp"
#include "renewscen/error.hpp"

namespace renewscen {

namespace {

constexpr double kTerawattGw = 1000.0;

CapacitySeries load(const ScenarioConfig& config, const std::string& dataset, QuantityKind kind,
                    Unit unit, const std::string& technology) {
  return load_capacity_series(resolve_dataset(config, dataset),
                              SeriesSchema{kind, unit, true, technology});
}

double cf_or(const TechnologyConfig& tech, std::string_view constant) {
  return tech.capacity_factor.value_or(get_constant(constant).value);
}

TechnologyProfile exponential_profile(const ScenarioConfig& config, const TechnologyConfig& tech,
                                      const std::string& name, std::string_view cf_constant) {
  auto series = load(config, tech.dataset, QuantityKind::InstalledPower, Unit::GW, name);
  auto fit = fit_exponential(series, tech.window);
  return TechnologyProfile(name, cf_or(tech, cf_constant), std::move(series), GrowthModel{fit});
}

// Rows: "depth,area,potential"; "# target: depth,area" names the extrapolation point.
OffshoreDepthReport load_offshore_depth(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::DatasetMissing, "cannot open " + path.string());
  OffshoreDepthReport out;
  bool have_target = false;
  std::string line;
  auto numbers = [&](std::string_view text, std::size_t expected) {
    std::vector<double> v;
    std::string cell;
    std::istringstream cells{std::string(text)};
    while (std::getline(cells, cell, ',')) {
      std::size_t used = 0;
      double x = 0;
      try {
        x = std::stod(cell, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used == 0 || cell.find_first_not_of(" \t\r", used) != std::string::npos)
        throw Error(ErrorCode::ParseError, fmt::format("{}: bad number '{}'", path.string(), cell));
      v.push_back(x);
    }
    if (v.size() != expected)
      throw Error(ErrorCode::ParseError,
                  fmt::format("{}: expected {} columns in '{}'", path.string(), expected, text));
    return v;
  };
  while (std::getline(in, line)) {
    if (line.empty() || line == "\r") continue;
    if (line.front() == '#') {
      constexpr std::string_view kTarget = "# target:";
      if (line.rfind(kTarget, 0) == 0) {
        auto v = numbers(std::string_view(line).substr(kTarget.size()), 2);
        out.target_depth = v[0];
        out.target_area = v[1];
        have_target = true;
      }
      continue;
    }
    auto v = numbers(line, 3);
    out.points.push_back({v[1], v[2]});
  }
  if (!have_target) throw Error(ErrorCode::ParseError, path.string() + ": missing '# target:' line");
  if (out.points.size() < 2)
    throw Error(ErrorCode::TooFewPoints, path.string() + ": need at least two depth rows");
  out.extrapolated = offshore_depth_extrapolation(out.points, out.target_area);
  return out;
}

LearningReport run_learning(const ScenarioConfig& config, const TechnologyProfile& pv,
                            const TechnologyProfile& wind) {
  auto pv_year = cost_by_year(load(config, config.lcoe_pv, QuantityKind::UnitCost,
                                   Unit::USDPerMWh, "pv"));
  auto wind_year = cost_by_year(load(config, config.lcoe_wind, QuantityKind::UnitCost,
                                     Unit::USDPerMWh, "wind"));
  auto battery = cost_by_year(load(config, config.battery, QuantityKind::UnitCost,
                                   Unit::USDPerKWh, "battery"));
  auto pv_gen = join_cost_to_generation(pv_year, pv);
  auto wind_gen = join_cost_to_generation(wind_year, wind);
  auto pv_fit = fit_learning_curve(pv_gen);
  auto wind_fit = fit_learning_curve(wind_gen);
  const double probe = 75500.0;
  auto battery_decay = fit_time_decay(battery);
  const double battery_year = 2030.0;
  return LearningReport{
      .pv_by_generation = pv_gen,
      .wind_by_generation = wind_gen,
      .pv = pv_fit,
      .wind = wind_fit,
      .pv_learning_rate = learning_rate(pv_fit),
      .wind_learning_rate = learning_rate(wind_fit),
      .crossing = curve_crossing(pv_fit, wind_fit),
      .pv_cost_probe = probe,
      .pv_cost_at_probe = cost_at(pv_fit, probe),
      .pv_by_year = pv_year,
      .wind_by_year = wind_year,
      .pv_decay = fit_time_decay(pv_year),
      .wind_decay = fit_time_decay(wind_year),
      .battery_by_year = battery,
      .battery_decay = battery_decay,
      .battery_year = battery_year,
      .battery_cost = battery_decay.cost_at(battery_year),
  };
}

BudgetReport run_budget(const ScenarioConfig& config) {
  BudgetReport out;
  const std::vector<std::string> demands{"electric_demand_2030", "reduced_primary_2030",
                                         "primary_demand_2030"};
  for (const auto& d : demands) out.areas.push_back(pv_desert_budget(get_constant(d).value));
  for (const auto& p : {"onshore", "offshore_200m", "offshore_1000m", "wind_total_as_stated"}) {
    auto potential = registered_potential(p);
    for (const auto& d : demands)
      out.wind_shares.emplace(fmt::format("{}/{}", p, d),
                              potential_fraction(get_constant(d).value, potential));
  }
  out.offshore_depth = load_offshore_depth(resolve_dataset(config, config.offshore_depth));
  return out;
}

std::vector<TechnologyProfile> components(const ScenarioReport& r, std::string_view scenario,
                                          WindTreatment treatment) {
  std::vector<TechnologyProfile> out;
  if (scenario.find("pv") != std::string_view::npos) out.push_back(r.pv);
  if (scenario.find("wind") != std::string_view::npos) out.push_back(r.wind_profile(treatment));
  if (scenario.find("hydro") != std::string_view::npos) out.push_back(r.hydro);
  return out;
}

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

}  // namespace

const TechnologyProfile& ScenarioReport::wind_profile(WindTreatment treatment) const {
  const auto& all = all_wind_treatments();
  auto idx = static_cast<std::size_t>(std::find(all.begin(), all.end(), treatment) - all.begin());
  if (idx >= wind.size())
    throw Error(ErrorCode::MissingFit, fmt::format("no wind fit for {}", to_string(treatment)));
  return wind[idx];
}

const CrossingEntry& ScenarioReport::crossing(std::string_view scenario, std::string_view threshold,
                                              std::optional<WindTreatment> treatment) const {
  const bool has_wind = scenario.find("wind") != std::string_view::npos;
  std::string_view wt = has_wind ? to_string(treatment.value_or(config.wind_treatment)) : "";
  for (const auto& c : crossings)
    if (c.scenario == scenario && c.result.threshold == threshold && c.wind_treatment == wt)
      return c;
  throw Error(ErrorCode::MissingFit,
              fmt::format("no crossing for scenario '{}' threshold '{}'", scenario, threshold));
}

const MixReport& ScenarioReport::mix(double year, std::optional<WindTreatment> treatment) const {
  std::string_view wt = to_string(treatment.value_or(config.wind_treatment));
  for (const auto& m : mixes)
    if (m.year == year && m.wind_treatment == wt) return m;
  throw Error(ErrorCode::MissingFit, fmt::format("no mix evaluated for {}", year));
}

ScenarioReport run_scenario(const ScenarioConfig& config) {
  for (const auto& name : config.thresholds) find_threshold(name);

  auto pv = exponential_profile(config, config.pv, "pv", "cf_pv");
  auto offshore = exponential_profile(config, config.offshore, "offshore", "cf_wind");

  auto wind_series = load(config, config.wind.dataset, QuantityKind::InstalledPower, Unit::GW,
                          "wind");
  WindFits wind_fits{
      .full_range = fit_exponential(wind_series, config.wind.window),
      .piecewise = detect_changepoint(wind_series, config.changepoint_min_segment,
                                      config.wind.window),
      .regime = fit_exponential(wind_series, config.wind_regime_window),
  };
  wind_fits.regime_change = wind_fits.piecewise.is_regime_change(config.changepoint_threshold);
  const double cf_wind = cf_or(config.wind, "cf_wind");
  std::vector<TechnologyProfile> wind;
  for (auto t : all_wind_treatments()) {
    GrowthModel model = wind_fits.full_range;
    if (t == WindTreatment::RightSegment) model = wind_fits.piecewise;
    if (t == WindTreatment::Rebound) model = wind_fits.regime;
    wind.emplace_back("wind", cf_wind, wind_series, model);
  }

  auto hydro_series = load(config, config.hydro.dataset, QuantityKind::InstalledPower, Unit::GW,
                           "hydro");
  auto hydro_fit = fit_polynomial(hydro_series, config.hydro_degree, config.hydro.window);
  TechnologyProfile hydro("hydro", cf_or(config.hydro, "cf_hydro"), hydro_series,
                          GrowthModel{hydro_fit});

  double last_data_year = std::max({pv.series().last_year(), wind_series.last_year(),
                                    hydro_series.last_year()});
  if (!(config.horizon > last_data_year))
    throw Error(ErrorCode::ConfigInvalid,
                fmt::format("horizon {} must lie after the last data year {}",
                            format_number(config.horizon), format_number(last_data_year)));

  const auto& off_fit = std::get<ExponentialFit>(*offshore.model());
  if (!(off_fit.ln_slope > 0.0))
    throw Error(ErrorCode::NonGrowingSeries, "offshore capacity is not growing");
  const double terawatt_year =
      off_fit.reference_year + (std::log(kTerawattGw) - off_fit.ln_intercept) / off_fit.ln_slope;

  auto learning = run_learning(config, pv, wind.front());
  auto budget = run_budget(config);

  ScenarioReport report{
      .config = config,
      .pv = std::move(pv),
      .offshore = std::move(offshore),
      .hydro = std::move(hydro),
      .wind_fits = wind_fits,
      .wind = std::move(wind),
      .offshore_terawatt_year = terawatt_year,
      .crossings = {},
      .mixes = {},
      .crossovers = {},
      .learning = std::move(learning),
      .budget = std::move(budget),
      .discrepancies = {},
  };

  for (const auto& name : config.thresholds) {
    auto threshold = find_threshold(name);
    report.crossings.push_back(
        {"pv", "", crossing_year(combine({report.pv}), threshold, config.horizon)});
    for (auto t : all_wind_treatments()) {
      for (std::string_view scenario : {"wind", "pv+wind", "pv+wind+hydro"}) {
        auto projection = combine(components(report, scenario, t));
        report.crossings.push_back({std::string(scenario), std::string(to_string(t)),
                                    crossing_year(projection, threshold, config.horizon)});
      }
    }
  }

  for (auto t : all_wind_treatments()) {
    auto projection = combine(components(report, "pv+wind+hydro", t));
    for (double year : config.mix_years) {
      MixReport mix{std::string(to_string(t)), year, mix_at_year(projection, year), 0.0};
      for (const auto& e : mix.entries) mix.total += e.generation;
      report.mixes.push_back(std::move(mix));
    }
    const auto& wp = report.wind_profile(t);
    const auto* piecewise = std::get_if<PiecewiseExponentialFit>(&*wp.model());
    if (piecewise) {
      TechnologyProfile right("wind", wp.capacity_factor(), wp.series(),
                              GrowthModel{piecewise->right});
      report.crossovers.push_back(
          {std::string(to_string(t)), pv_wind_generation_crossover(report.pv, right)});
    } else {
      report.crossovers.push_back(
          {std::string(to_string(t)), pv_wind_generation_crossover(report.pv, wp)});
    }
  }

  report.discrepancies = budget_discrepancies();
  auto scenario_rows = scenario_discrepancies(report);
  report.discrepancies.insert(report.discrepancies.end(), scenario_rows.begin(),
                              scenario_rows.end());
  return report;
}

std::vector<Discrepancy> scenario_discrepancies(const ScenarioReport& r) {
  const char* kScenario = "scenario projections";
  const char* kMixClaims = "2025/2030 generation mix";
  std::vector<Discrepancy> rows;
  auto crossing_row = [&](std::string id, std::string description, double stated,
                          std::string_view scenario, std::string_view threshold) {
    auto has = std::find(r.config.thresholds.begin(), r.config.thresholds.end(), threshold);
    if (has == r.config.thresholds.end()) return;
    const auto& c = r.crossing(scenario, threshold);
    if (c.result.status != CrossingStatus::Crossed) return;
    rows.push_back({std::move(id), std::move(description), stated, *c.result.year, "year",
                    kScenario});
  };
  crossing_row("crossing_pv_wind_electric", "PV + wind reach 33,000 TWh/yr", 2026.0, "pv+wind",
               "electric_2026");
  crossing_row("crossing_pv_wind_hydro_electric", "PV + wind + hydro reach 33,000 TWh/yr", 2025.0,
               "pv+wind+hydro", "electric_2026");
  crossing_row("crossing_pv_wind_hydro_reduced_primary",
               "PV + wind + hydro reach 106,950 TWh/yr", 2030.0, "pv+wind+hydro",
               "reduced_primary_2030");
  crossing_row("crossing_pv_electric", "PV alone reaches 33,000 TWh/yr", 2027.0, "pv",
               "electric_2026");
  crossing_row("crossing_pv_primary", "PV alone reaches 198,000 TWh/yr", 2036.5, "pv",
               "primary_2032");

  for (const auto& c : r.crossovers)
    if (c.wind_treatment == to_string(r.config.wind_treatment))
      rows.push_back({"pv_wind_crossover", "PV generation overtakes wind", 2024.0, c.year, "year",
                      kScenario});
  rows.push_back({"offshore_terawatt_year", "offshore wind reaches 1 TW installed", 2032.0,
                  r.offshore_terawatt_year, "year", "offshore wind discussion"});

  struct MixClaim {
    double year;
    const char* tech;
    double stated;
  };
  for (const auto& claim : {MixClaim{2025, "pv", 15000}, MixClaim{2025, "wind", 11700},
                            MixClaim{2025, "hydro", 6300}, MixClaim{2030, "pv", 75500},
                            MixClaim{2030, "wind", 31100}, MixClaim{2030, "hydro", 6500}}) {
    if (std::find(r.config.mix_years.begin(), r.config.mix_years.end(), claim.year) ==
        r.config.mix_years.end())
      continue;
    for (const auto& e : r.mix(claim.year).entries)
      if (e.technology == claim.tech)
        rows.push_back({fmt::format("mix_{}_{}", format_number(claim.year), claim.tech),
                        fmt::format("{} generation in {}", claim.tech, format_number(claim.year)),
                        claim.stated, e.generation, "TWh_per_year", kMixClaims});
  }
  if (std::find(r.config.mix_years.begin(), r.config.mix_years.end(), 2025.0) !=
      r.config.mix_years.end())
    rows.push_back({"mix_2025_total", "total generation in 2025", 33000.0, r.mix(2025).total,
                    "TWh_per_year", kMixClaims});

  rows.push_back({"battery_cost_2030", "battery pack cost in 2030", 10.0, r.learning.battery_cost,
                  "USD_per_kWh", "battery cost outlook"});
  rows.push_back({"offshore_1000m_potential", "offshore <1000 m potential by area extrapolation",
                  get_constant("offshore_1000m").value, r.budget.offshore_depth.extrapolated,
                  "TWh_per_year", "offshore potential extrapolation"});
  std::sort(rows.begin(), rows.end(),
            [](const Discrepancy& a, const Discrepancy& b) { return a.id < b.id; });
  return rows;
}

std::string emit_discrepancies(std::span<const Discrepancy> rows) {
  std::vector<const Discrepancy*> order;
  for (const auto& d : rows) order.push_back(&d);
  std::stable_sort(order.begin(), order.end(), [](const Discrepancy* a, const Discrepancy* b) {
    double da = std::abs(a->deviation()), db = std::abs(b->deviation());
    if (da != db) return da > db;
    return a->id < b->id;
  });
  std::string out = "id,description,stated_value,computed_value,unit,deviation,abs_difference,citation\n";
  for (const auto* d : order) {
    out += fmt::format("{},{},{},{},{},{},{},{}\n", csv_field(d->id), csv_field(d->description),
                       format_number(d->stated), format_number(d->computed), csv_field(d->unit),
                       format_number(d->deviation()), format_number(d->abs_difference()),
                       csv_field(d->source));
  }
  return out;
}

std::string emit_discrepancies(const ScenarioReport& report) {
  return emit_discrepancies(report.discrepancies);
}

std::string emit_crossings_csv(const ScenarioReport& report) {
  std::string out = "scenario,wind_treatment,threshold,level_TWh_per_year,status,year,start,horizon\n";
  for (const auto& c : report.crossings) {
    out += fmt::format("{},{},{},{},{},{},{},{}\n", c.scenario, c.wind_treatment,
                       c.result.threshold, format_number(c.result.level), to_string(c.result.status),
                       c.result.year ? format_number(*c.result.year) : "", format_number(c.result.start),
                       format_number(c.result.horizon));
  }
  return out;
}

std::string emit_mixes_csv(const ScenarioReport& report) {
  std::string out = "wind_treatment,year,technology,generation_TWh_per_year,share_percent\n";
  for (const auto& m : report.mixes)
    for (const auto& e : m.entries)
      out += fmt::format("{},{},{},{},{}\n", m.wind_treatment, format_number(m.year), e.technology,
                         format_number(e.generation), format_number(e.share_percent));
  return out;
}

}  // namespace renewscen
