#include "renewscen/report/figures.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include <fmt/format.h>

#include "renewscen/corpus/constants.hpp"
#include "renewscen/error.hpp"
#include "renewscen/report/svg.hpp"

namespace renewscen {

namespace {

using svg::Panel;
using svg::Scale;
using svg::Series;
using svg::Style;
using Points = std::vector<std::pair<double, double>>;

constexpr const char* kPvColor = "#e08214";
constexpr const char* kWindColor = "#2166ac";
constexpr const char* kHydroColor = "#1b7837";
constexpr const char* kFitColor = "#b2182b";
constexpr const char* kAltColor = "#762a83";
constexpr double kCurveStep = 0.25;
constexpr double kGenerationCeiling = 1e6;  // TWh/yr, top of the generation charts

Points data_points(std::span<const Sample> samples, double scale = 1.0) {
  Points out;
  for (const auto& s : samples) out.emplace_back(s.year, s.value * scale);
  return out;
}

Points sample_curve(double from, double to, const std::function<double(double)>& f) {
  Points out;
  int n = std::max(2, static_cast<int>(std::ceil((to - from) / kCurveStep)) + 1);
  for (int i = 0; i < n; ++i) {
    double x = from + (to - from) * i / (n - 1);
    out.emplace_back(x, f(x));
  }
  return out;
}

Points log_curve(double from, double to, const std::function<double(double)>& f) {
  Points out;
  const int n = 64;
  double a = std::log10(from), b = std::log10(to);
  for (int i = 0; i < n; ++i) {
    double x = std::pow(10.0, a + (b - a) * i / (n - 1));
    out.emplace_back(x, f(x));
  }
  return out;
}

const ExponentialFit& exponential_of(const TechnologyProfile& p) {
  const auto* f = p.model() ? std::get_if<ExponentialFit>(&*p.model()) : nullptr;
  if (!f) throw Error(ErrorCode::MissingFit, p.name() + " has no exponential fit");
  return *f;
}

Series fit_series(const std::string& label, const std::string& color, Points pts,
                  Style style = Style::Line) {
  return Series{label, color, style, std::move(pts), ""};
}

Series data_series(const std::string& label, const std::string& color, Points pts) {
  return Series{label, color, Style::Markers, std::move(pts), "data"};
}

std::vector<svg::HorizontalLine> demand_lines() {
  std::vector<svg::HorizontalLine> out;
  for (const char* name : {"electric_2026", "reduced_primary_2030", "primary_2032"}) {
    auto t = find_threshold(name);
    out.push_back({t.level, fmt::format("{} ({:.0f} TWh/yr)", t.name, t.level)});
  }
  return out;
}

std::string treatment_label(const ScenarioReport& r) {
  return std::string(to_string(r.config.wind_treatment));
}

// Installed power history in linear and log scale with the exponential fit.
std::vector<Panel> power_panels(const std::string& what, const TechnologyProfile& p,
                                const std::string& color) {
  const auto& fit = exponential_of(p);
  Points line = sample_curve(fit.window.first, p.series().last_year(),
                             [&](double t) { return fit.value_at(t); });
  std::vector<Panel> panels;
  for (Scale s : {Scale::Linear, Scale::Log}) {
    Panel panel;
    panel.title = fmt::format("{} ({})", what, s == Scale::Log ? "log scale" : "linear scale");
    panel.x = {"year", Scale::Linear, 0, 0};
    panel.y = {"installed power [GW]", s, 0, 0};
    panel.series.push_back(data_series(p.name() + " data", color, data_points(p.series().samples())));
    panel.series.push_back(fit_series(
        fmt::format("exponential fit, doubling {:.2f} yr", doubling_time(fit)), kFitColor, line));
    panels.push_back(std::move(panel));
  }
  return panels;
}

std::string fig1(const ScenarioReport& r) {
  return svg::render("fig1", "Installed photovoltaic power",
                     power_panels("PV installed power", r.pv, kPvColor));
}

std::string fig2(const ScenarioReport& r) {
  const auto& w = r.wind_fits;
  const auto& series = r.wind.front().series();
  const double last = series.last_year();
  std::vector<Panel> panels;
  for (Scale s : {Scale::Linear, Scale::Log}) {
    Panel panel;
    panel.title = fmt::format("wind installed power ({})", s == Scale::Log ? "log scale" : "linear scale");
    panel.x = {"year", Scale::Linear, 0, 0};
    panel.y = {"installed power [GW]", s, 0, 0};
    panel.series.push_back(data_series("wind data", kWindColor, data_points(series.samples())));
    panel.series.push_back(fit_series(
        "early exponential regime", kFitColor,
        sample_curve(w.regime.window.first, last, [&](double t) { return w.regime.value_at(t); })));
    panel.series.push_back(fit_series(
        "piecewise fit", kAltColor,
        sample_curve(w.piecewise.window().first, last,
                     [&](double t) { return w.piecewise.value_at(t); }),
        Style::Dashed));
    panel.verticals.push_back(
        {w.piecewise.changepoint_year, fmt::format("changepoint {:g}", w.piecewise.changepoint_year)});
    panels.push_back(std::move(panel));
  }
  return svg::render("fig2", "Installed wind power", panels);
}

std::string fig3(const ScenarioReport& r) {
  return svg::render("fig3", "Installed offshore wind power",
                     power_panels("offshore installed power", r.offshore, kWindColor));
}

std::string fig4(const ScenarioReport& r) {
  const auto& wind = r.headline_wind();
  Panel power;
  power.title = "installed power";
  power.x = {"year", Scale::Linear, 0, 0};
  power.y = {"installed power [GW]", Scale::Linear, 0, 0};
  power.series.push_back(data_series("PV", kPvColor, data_points(r.pv.series().samples())));
  power.series.push_back(data_series("wind", kWindColor, data_points(wind.series().samples())));
  Panel gen;
  gen.title = "generation capability";
  gen.x = {"year", Scale::Linear, 0, 0};
  gen.y = {"generation [TWh/yr]", Scale::Linear, 0, 0};
  gen.series.push_back(data_series(fmt::format("PV (cf {:g})", r.pv.capacity_factor()), kPvColor,
                                   data_points(series_to_generation(r.pv).samples)));
  gen.series.push_back(data_series(fmt::format("wind (cf {:g})", wind.capacity_factor()), kWindColor,
                                   data_points(series_to_generation(wind).samples)));
  return svg::render("fig4", "Installed power and generation capability", {power, gen});
}

Points projection_curve(const TechnologyProfile& p, double horizon) {
  double from = window_of(*p.model()).first;
  return sample_curve(from, horizon, [&](double t) { return p.generation_at(t); });
}

std::string fig5(const ScenarioReport& r) {
  const double h = r.config.horizon;
  const auto& wind = r.headline_wind();
  Panel panel;
  panel.title = "generation capability per technology";
  panel.x = {"year", Scale::Linear, 0, 0};
  panel.y = {"generation [TWh/yr]", Scale::Log, 1.0, kGenerationCeiling};
  panel.series.push_back(data_series("PV", kPvColor, data_points(series_to_generation(r.pv).samples)));
  panel.series.push_back(data_series("wind", kWindColor, data_points(series_to_generation(wind).samples)));
  panel.series.push_back(data_series("hydro", kHydroColor, data_points(series_to_generation(r.hydro).samples)));
  panel.series.push_back(fit_series("PV projection", kPvColor, projection_curve(r.pv, h)));
  panel.series.push_back(fit_series("wind projection (" + treatment_label(r) + ")", kWindColor,
                                    projection_curve(wind, h)));
  panel.series.push_back(fit_series("hydro projection", kHydroColor, projection_curve(r.hydro, h)));
  panel.thresholds = demand_lines();
  for (const auto& c : r.crossings)
    if (c.scenario == "pv" && c.result.status == CrossingStatus::Crossed &&
        (c.result.threshold == "electric_2026" || c.result.threshold == "primary_2032"))
      panel.markers.push_back({*c.result.year, c.result.level,
                               fmt::format("PV {:.1f}", *c.result.year)});
  return svg::render("fig5", "Generation capability of installed PV, wind and hydro", {panel});
}

std::string fig6(const ScenarioReport& r) {
  const double h = r.config.horizon;
  const auto& wind = r.headline_wind();
  auto pv_gen = series_to_generation(r.pv).samples;
  auto wind_gen = series_to_generation(wind).samples;
  Points combined;
  for (const auto& p : pv_gen)
    for (const auto& w : wind_gen)
      if (w.year == p.year) combined.emplace_back(p.year, p.value + w.value);

  auto pw = combine({r.pv, wind});
  auto pwh = combine({r.pv, wind, r.hydro});
  Panel panel;
  panel.title = "combined generation capability (" + treatment_label(r) + " wind)";
  panel.x = {"year", Scale::Linear, 0, 0};
  panel.y = {"generation [TWh/yr]", Scale::Log, 10.0, kGenerationCeiling};
  panel.series.push_back(data_series("PV + wind data", kPvColor, combined));
  panel.series.push_back(fit_series("PV + wind", kFitColor,
                                    sample_curve(pw.start_year(), h, [&](double t) { return pw.evaluate(t); })));
  panel.series.push_back(fit_series("PV + wind + hydro", kHydroColor,
                                    sample_curve(pwh.start_year(), h, [&](double t) { return pwh.evaluate(t); }),
                                    Style::Dashed));
  panel.thresholds = demand_lines();
  const std::string wt = treatment_label(r);
  for (const auto& c : r.crossings)
    if (c.wind_treatment == wt && (c.scenario == "pv+wind" || c.scenario == "pv+wind+hydro") &&
        c.result.status == CrossingStatus::Crossed &&
        (c.result.threshold == "electric_2026" || c.result.threshold == "reduced_primary_2030" ||
         c.result.threshold == "primary_2032"))
      panel.markers.push_back({*c.result.year, c.result.level,
                               fmt::format("{:.1f}", *c.result.year)});
  return svg::render("fig6", "Combined generation capability of PV and wind", {panel});
}

std::string fig7(const ScenarioReport& r) {
  const auto& L = r.learning;
  std::vector<Panel> panels;
  for (Scale s : {Scale::Linear, Scale::Log}) {
    Panel panel;
    panel.title = fmt::format("LCOE ({})", s == Scale::Log ? "log scale" : "linear scale");
    panel.x = {"year", Scale::Linear, 0, 0};
    panel.y = {"LCOE [USD/MWh]", s, 0, 0};
    panel.series.push_back(data_series("PV", kPvColor, data_points(L.pv_by_year.samples())));
    panel.series.push_back(data_series("wind", kWindColor, data_points(L.wind_by_year.samples())));
    panel.series.push_back(fit_series(
        fmt::format("PV fit, x{:.3f}/yr", L.pv_decay.annual_factor), kPvColor,
        sample_curve(L.pv_decay.window.first, L.pv_decay.window.last,
                     [&](double t) { return L.pv_decay.cost_at(t); }),
        Style::Dashed));
    panel.series.push_back(fit_series(
        fmt::format("wind fit, x{:.3f}/yr", L.wind_decay.annual_factor), kWindColor,
        sample_curve(L.wind_decay.window.first, L.wind_decay.window.last,
                     [&](double t) { return L.wind_decay.cost_at(t); }),
        Style::Dashed));
    panels.push_back(std::move(panel));
  }
  return svg::render("fig7", "Levelized cost of electricity over time", panels);
}

std::string fig8(const ScenarioReport& r) {
  const auto& L = r.learning;
  auto line = [](const LearningCurveFit& f) {
    return [f](double x) { return std::pow(10.0, f.log10_intercept + f.log10_slope * std::log10(x)); };
  };
  auto xs = [](const CostSeries& s) {
    Points out;
    for (const auto& p : s.samples()) out.emplace_back(p.year, p.value);
    return out;
  };
  const double x_lo = std::min(L.pv.x_min, L.wind.x_min);
  const double x_hi = std::max({L.crossing.x * 3.0, 3.0 * find_threshold("primary_2032").level,
                                L.pv.x_max, L.wind.x_max});
  Panel panel;
  panel.title = "learning curves";
  panel.x = {"generation capability [TWh/yr]", Scale::Log, 0, 0};
  panel.y = {"LCOE [USD/MWh]", Scale::Log, 0, 0};
  panel.series.push_back(data_series("PV", kPvColor, xs(L.pv_by_generation)));
  panel.series.push_back(data_series("wind", kWindColor, xs(L.wind_by_generation)));
  panel.series.push_back(fit_series(fmt::format("PV fit, learning rate {:.3f}", L.pv_learning_rate),
                                    kPvColor, log_curve(x_lo, x_hi, line(L.pv))));
  panel.series.push_back(fit_series(fmt::format("wind fit, learning rate {:.3f}", L.wind_learning_rate),
                                    kWindColor, log_curve(x_lo, x_hi, line(L.wind))));
  for (const char* name : {"electric_2026", "primary_2032"}) {
    auto t = find_threshold(name);
    panel.verticals.push_back({t.level, fmt::format("{:.0f}", t.level)});
  }
  panel.markers.push_back({L.crossing.x, L.crossing.cost,
                           fmt::format("crossing {:.3g} TWh/yr", L.crossing.x)});
  return svg::render("fig8", "LCOE against generation capability", {panel});
}

std::string appfig1(const ScenarioReport& r) {
  const auto& od = r.budget.offshore_depth;
  Points data;
  for (const auto& p : od.points) data.emplace_back(p.area, p.potential);
  Points fitted;
  std::vector<AreaPotentialPoint> pts = od.points;
  for (double a : {0.0, od.target_area})
    fitted.emplace_back(a, offshore_depth_extrapolation(pts, a));
  Panel panel;
  panel.title = "offshore wind potential against available area";
  panel.x = {"available area [million km2]", Scale::Linear, 0, 0};
  panel.y = {"potential [TWh/yr]", Scale::Linear, 0, 0};
  panel.series.push_back(data_series("potential by depth", kWindColor, data));
  panel.series.push_back(fit_series("linear fit", kFitColor, fitted, Style::Dashed));
  panel.markers.push_back({od.target_area, od.extrapolated,
                           fmt::format("{:g} m: {:.0f}", od.target_depth, od.extrapolated)});
  panel.thresholds.push_back({get_constant("offshore_1000m").value, "registered <1000 m potential"});
  return svg::render("appfig1", "Offshore wind potential extrapolation", {panel});
}

std::string appfig6(const ScenarioReport& r) {
  const auto& L = r.learning;
  Panel panel;
  panel.title = "battery pack cost";
  panel.x = {"year", Scale::Linear, 0, 0};
  panel.y = {"cost [USD/kWh]", Scale::Log, 0, 0};
  panel.series.push_back(data_series("pack cost", kAltColor, data_points(L.battery_by_year.samples())));
  panel.series.push_back(fit_series(
      fmt::format("exponential fit, x{:.3f}/yr", L.battery_decay.annual_factor), kFitColor,
      sample_curve(L.battery_decay.window.first, L.battery_year,
                   [&](double t) { return L.battery_decay.cost_at(t); }),
      Style::Dashed));
  panel.markers.push_back({L.battery_year, L.battery_cost,
                           fmt::format("{:g}: {:.1f} USD/kWh", L.battery_year, L.battery_cost)});
  return svg::render("appfig6", "Battery pack cost decline", {panel});
}

}  // namespace

const std::vector<std::string>& figure_ids() {
  static const std::vector<std::string> ids{"fig1", "fig2", "fig3", "fig4",    "fig5",
                                            "fig6", "fig7", "fig8", "appfig1", "appfig6"};
  return ids;
}

std::string emit_figure(const ScenarioReport& report, std::string_view id) {
  if (id == "fig1") return fig1(report);
  if (id == "fig2") return fig2(report);
  if (id == "fig3") return fig3(report);
  if (id == "fig4") return fig4(report);
  if (id == "fig5") return fig5(report);
  if (id == "fig6") return fig6(report);
  if (id == "fig7") return fig7(report);
  if (id == "fig8") return fig8(report);
  if (id == "appfig1") return appfig1(report);
  if (id == "appfig6") return appfig6(report);
  std::string valid;
  for (const auto& v : figure_ids()) valid += (valid.empty() ? "" : ", ") + v;
  throw Error(ErrorCode::MissingFit, fmt::format("unknown figure '{}'; valid ids: {}", id, valid));
}

}  // namespace renewscen
