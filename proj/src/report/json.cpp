#include <cmath>
#include <variant>

#include <json.hpp>

#include "renewscen/corpus/constants.hpp"
#include "renewscen/report/report.hpp"

namespace renewscen {

namespace {

using json = nlohmann::ordered_json;

constexpr const char* kSchema = "renewscen.report/1";

json quantity(double value, std::string_view unit) {
  json q;
  if (std::isfinite(value))
    q["value"] = value;
  else
    q["value"] = value > 0 ? "inf" : "-inf";
  q["unit"] = unit;
  return q;
}

json window_json(const YearRange& w) {
  return json{{"first", quantity(w.first, "year")}, {"last", quantity(w.last, "year")}};
}

json exponential_json(const ExponentialFit& f) {
  json j;
  j["model"] = "exponential";
  j["window"] = window_json(f.window);
  j["reference_year"] = quantity(f.reference_year, "year");
  j["ln_intercept"] = quantity(f.ln_intercept, "ln_GW");
  j["growth_rate"] = quantity(f.ln_slope, "per_year");
  if (f.ln_slope > 0) j["doubling_time"] = quantity(doubling_time(f), "year");
  j["r_squared"] = quantity(f.r_squared, "1");
  j["rmse_log"] = quantity(f.rmse, "ln_GW");
  j["residual_signs"] = residual_sign_pattern(f);
  return j;
}

json polynomial_json(const PolynomialFit& f) {
  json j;
  j["model"] = "polynomial";
  j["window"] = window_json(f.window);
  j["degree"] = f.degree;
  j["reference_year"] = quantity(f.reference_year, "year");
  json coeffs = json::array();
  for (std::size_t i = 0; i < f.coefficients.size(); ++i)
    coeffs.push_back(quantity(f.coefficients[i], i == 0 ? "GW" : "GW_per_year^" + std::to_string(i)));
  j["coefficients"] = coeffs;
  j["rmse"] = quantity(f.rmse, "GW");
  return j;
}

json piecewise_json(const PiecewiseExponentialFit& f, double threshold) {
  json j;
  j["model"] = "piecewise_exponential";
  j["changepoint_year"] = quantity(f.changepoint_year, "year");
  j["left"] = exponential_json(f.left);
  j["right"] = exponential_json(f.right);
  j["sse_piecewise"] = quantity(f.sse_piecewise, "ln_GW^2");
  j["sse_single"] = quantity(f.sse_single, "ln_GW^2");
  j["improvement_ratio"] = quantity(f.improvement_ratio, "1");
  j["significance_threshold"] = quantity(threshold, "1");
  j["regime_change"] = f.is_regime_change(threshold);
  return j;
}

json model_json(const GrowthModel& m, double threshold) {
  return std::visit(
      [&](const auto& f) -> json {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, ExponentialFit>)
          return exponential_json(f);
        else if constexpr (std::is_same_v<T, PolynomialFit>)
          return polynomial_json(f);
        else
          return piecewise_json(f, threshold);
      },
      m);
}

json profile_json(const TechnologyProfile& p, double threshold) {
  json j;
  j["dataset_technology"] = p.series().technology();
  j["samples"] = p.series().size();
  j["capacity_factor"] = quantity(p.capacity_factor(), "1");
  j["last_observation"] = json{{"year", quantity(p.series().last().year, "year")},
                               {"installed_power", quantity(p.series().last().value, "GW")}};
  j["fit"] = model_json(*p.model(), threshold);
  return j;
}

json learning_json(const LearningCurveFit& f, double rate) {
  json j;
  j["axis"] = to_string(f.axis);
  j["log10_intercept"] = quantity(f.log10_intercept, "log10_USD_per_MWh");
  j["log10_slope"] = quantity(f.log10_slope, "1");
  j["learning_rate"] = quantity(rate, "per_doubling");
  j["r_squared"] = quantity(f.r_squared, "1");
  j["rmse_log10"] = quantity(f.rmse_log10, "log10_USD_per_MWh");
  j["x_min"] = quantity(f.x_min, "TWh_per_year");
  j["x_max"] = quantity(f.x_max, "TWh_per_year");
  return j;
}

json decay_json(const TimeDecayFit& f, std::string_view unit) {
  json j;
  j["window"] = window_json(f.window);
  j["reference_year"] = quantity(f.reference_year, "year");
  j["cost_at_reference"] = quantity(f.cost_at_reference, unit);
  j["annual_factor"] = quantity(f.annual_factor, "per_year");
  j["r_squared"] = quantity(f.r_squared, "1");
  return j;
}

json config_json(const ScenarioConfig& c) {
  json j;
  auto tech = [](const TechnologyConfig& t) {
    json o;
    o["dataset"] = t.dataset;
    if (t.window) o["window"] = window_json(*t.window);
    if (t.capacity_factor) o["capacity_factor"] = quantity(*t.capacity_factor, "1");
    return o;
  };
  j["pv"] = tech(c.pv);
  j["wind"] = tech(c.wind);
  j["wind"]["treatment"] = to_string(c.wind_treatment);
  j["wind"]["regime_window"] = window_json(c.wind_regime_window);
  j["offshore"] = tech(c.offshore);
  j["hydro"] = tech(c.hydro);
  j["hydro"]["degree"] = c.hydro_degree;
  j["changepoint"] = json{{"threshold", c.changepoint_threshold},
                          {"min_segment", c.changepoint_min_segment}};
  j["lcoe"] = json{{"pv", c.lcoe_pv}, {"wind", c.lcoe_wind}};
  j["battery"] = c.battery;
  j["offshore_depth"] = c.offshore_depth;
  j["thresholds"] = c.thresholds;
  j["mix_years"] = c.mix_years;
  j["horizon"] = quantity(c.horizon, "year");
  return j;
}

}  // namespace

std::string emit_json(const ScenarioReport& r) {
  const double thr = r.config.changepoint_threshold;
  json doc;
  doc["schema"] = kSchema;
  doc["config"] = config_json(r.config);

  json fits;
  fits["pv"] = profile_json(r.pv, thr);
  json wind = profile_json(r.wind.front(), thr);
  wind.erase("fit");
  wind["headline_treatment"] = to_string(r.config.wind_treatment);
  wind["full_range"] = exponential_json(r.wind_fits.full_range);
  wind["piecewise"] = piecewise_json(r.wind_fits.piecewise, thr);
  wind["regime"] = exponential_json(r.wind_fits.regime);
  fits["wind"] = wind;
  fits["offshore"] = profile_json(r.offshore, thr);
  fits["offshore"]["terawatt_year"] = quantity(r.offshore_terawatt_year, "year");
  fits["hydro"] = profile_json(r.hydro, thr);
  doc["fits"] = fits;

  json thresholds = json::array();
  for (const auto& name : r.config.thresholds) {
    auto t = find_threshold(name);
    thresholds.push_back(json{{"name", t.name},
                              {"level", quantity(t.level, "TWh_per_year")},
                              {"reference_year", quantity(t.reference_year, "year")},
                              {"citation", t.citation}});
  }
  doc["thresholds"] = thresholds;

  json crossings = json::array();
  for (const auto& c : r.crossings) {
    json e;
    e["scenario"] = c.scenario;
    e["wind_treatment"] = c.wind_treatment;
    e["threshold"] = c.result.threshold;
    e["level"] = quantity(c.result.level, "TWh_per_year");
    e["status"] = to_string(c.result.status);
    e["year"] = c.result.year ? quantity(*c.result.year, "year") : json(nullptr);
    e["start"] = quantity(c.result.start, "year");
    e["horizon"] = quantity(c.result.horizon, "year");
    crossings.push_back(e);
  }
  doc["crossings"] = crossings;

  json crossovers = json::array();
  for (const auto& c : r.crossovers)
    crossovers.push_back(json{{"wind_treatment", c.wind_treatment},
                              {"year", quantity(c.year, "year")}});
  doc["pv_wind_crossover"] = crossovers;

  json mixes = json::array();
  for (const auto& m : r.mixes) {
    json entries = json::array();
    for (const auto& e : m.entries)
      entries.push_back(json{{"technology", e.technology},
                             {"generation", quantity(e.generation, "TWh_per_year")},
                             {"share", quantity(e.share_percent, "percent")}});
    mixes.push_back(json{{"wind_treatment", m.wind_treatment},
                         {"year", quantity(m.year, "year")},
                         {"entries", entries},
                         {"total", quantity(m.total, "TWh_per_year")}});
  }
  doc["mixes"] = mixes;

  const auto& L = r.learning;
  json learning;
  learning["pv"] = learning_json(L.pv, L.pv_learning_rate);
  learning["wind"] = learning_json(L.wind, L.wind_learning_rate);
  learning["crossing"] = json{{"x", quantity(L.crossing.x, "TWh_per_year")},
                              {"cost", quantity(L.crossing.cost, "USD_per_MWh")}};
  learning["pv_cost_probe"] =
      json{{"x", quantity(L.pv_cost_probe, "TWh_per_year")},
           {"cost", quantity(L.pv_cost_at_probe.cost, "USD_per_MWh")},
           {"extrapolated", L.pv_cost_at_probe.extrapolated},
           {"below_floor", L.pv_cost_at_probe.below_floor}};
  learning["pv_time_decay"] = decay_json(L.pv_decay, "USD_per_MWh");
  learning["wind_time_decay"] = decay_json(L.wind_decay, "USD_per_MWh");
  learning["battery_time_decay"] = decay_json(L.battery_decay, "USD_per_kWh");
  learning["battery_projection"] = json{{"year", quantity(L.battery_year, "year")},
                                        {"cost", quantity(L.battery_cost, "USD_per_kWh")}};
  doc["learning"] = learning;

  json budget;
  json areas = json::array();
  for (const auto& a : r.budget.areas)
    areas.push_back(json{{"demand", quantity(a.demand, "TWh_per_year")},
                         {"density", quantity(a.density, "MW_per_km2")},
                         {"capacity_factor", quantity(a.capacity_factor, "1")},
                         {"required_area", quantity(a.required_area, "km2")},
                         {"reference_area", quantity(a.reference_area, "km2")},
                         {"fraction", quantity(a.fraction, "1")}});
  budget["pv_desert_areas"] = areas;
  json shares = json::object();
  for (const auto& [key, s] : r.budget.wind_shares)
    shares[key] = json{{"fraction", quantity(s.fraction, "1")},
                       {"times_over", quantity(s.times_over, "1")}};
  budget["wind_potential_shares"] = shares;
  const auto& od = r.budget.offshore_depth;
  json points = json::array();
  for (const auto& p : od.points)
    points.push_back(json{{"area", quantity(p.area, "million_km2")},
                          {"potential", quantity(p.potential, "TWh_per_year")}});
  budget["offshore_depth"] = json{{"points", points},
                                  {"target_depth", quantity(od.target_depth, "m")},
                                  {"target_area", quantity(od.target_area, "million_km2")},
                                  {"extrapolated", quantity(od.extrapolated, "TWh_per_year")}};
  doc["budget"] = budget;

  json disc = json::array();
  for (const auto& d : r.discrepancies)
    disc.push_back(json{{"id", d.id},
                        {"description", d.description},
                        {"stated_value", quantity(d.stated, d.unit)},
                        {"computed_value", quantity(d.computed, d.unit)},
                        {"deviation", quantity(d.deviation(), "1")},
                        {"abs_difference", quantity(d.abs_difference(), d.unit)},
                        {"citation", d.source}});
  doc["discrepancies"] = disc;
  return doc.dump(2) + "\n";
}

}  // namespace renewscen
