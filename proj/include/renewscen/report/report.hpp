#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "renewscen/genconvert.hpp"
#include "renewscen/growthfit.hpp"
#include "renewscen/learncurve.hpp"
#include "renewscen/report/config.hpp"
#include "renewscen/resourcebudget.hpp"
#include "renewscen/scenario.hpp"

namespace renewscen {

struct WindFits {
  ExponentialFit full_range;
  PiecewiseExponentialFit piecewise;
  ExponentialFit regime;  ///< early exponential regime
  bool regime_change = false;
};

struct CrossingEntry {
  std::string scenario;        ///< e.g. "pv+wind+hydro"
  std::string wind_treatment;  ///< empty when wind is not a component
  CrossingResult result;
};

struct MixReport {
  std::string wind_treatment;
  double year = 0.0;
  std::vector<MixEntry> entries;  ///< pv, wind, hydro
  double total = 0.0;
};

struct CrossoverEntry {
  std::string wind_treatment;
  double year = 0.0;
};

struct LearningReport {
  CostSeries pv_by_generation;
  CostSeries wind_by_generation;
  LearningCurveFit pv;
  LearningCurveFit wind;
  double pv_learning_rate = 0.0;
  double wind_learning_rate = 0.0;
  CurveCrossing crossing;
  double pv_cost_probe = 75500.0;  ///< TWh/yr
  CostEstimate pv_cost_at_probe;
  CostSeries pv_by_year;
  CostSeries wind_by_year;
  TimeDecayFit pv_decay;
  TimeDecayFit wind_decay;
  CostSeries battery_by_year;
  TimeDecayFit battery_decay;
  double battery_year = 2030.0;
  double battery_cost = 0.0;  ///< USD/kWh at battery_year
};

struct OffshoreDepthReport {
  std::vector<AreaPotentialPoint> points;
  double target_depth = 0.0;
  double target_area = 0.0;
  double extrapolated = 0.0;  ///< TWh/yr
};

struct BudgetReport {
  std::vector<AreaBudget> areas;  ///< electric 2030, reduced primary, primary 2030
  std::map<std::string, PotentialShare> wind_shares;  ///< "<potential>/<demand>"
  OffshoreDepthReport offshore_depth;
};

struct ScenarioReport {
  ScenarioConfig config;
  TechnologyProfile pv;
  TechnologyProfile offshore;
  TechnologyProfile hydro;
  WindFits wind_fits;
  /// One wind profile per treatment, in all_wind_treatments() order.
  std::vector<TechnologyProfile> wind;
  /// Year offshore capacity reaches 1 TW on its exponential fit.
  double offshore_terawatt_year = 0.0;
  std::vector<CrossingEntry> crossings;
  std::vector<MixReport> mixes;
  std::vector<CrossoverEntry> crossovers;
  LearningReport learning;
  BudgetReport budget;
  std::vector<Discrepancy> discrepancies;

  const TechnologyProfile& wind_profile(WindTreatment treatment) const;
  const TechnologyProfile& headline_wind() const { return wind_profile(config.wind_treatment); }
  /// Error(MissingFit) if the combination was not evaluated.
  const CrossingEntry& crossing(std::string_view scenario, std::string_view threshold,
                                std::optional<WindTreatment> treatment = std::nullopt) const;
  const MixReport& mix(double year, std::optional<WindTreatment> treatment = std::nullopt) const;
};

/// Loads every dataset, fits every technology and evaluates all crossings,
/// mixes, learning curves and budgets.
ScenarioReport run_scenario(const ScenarioConfig& config);

/// Sorted by |deviation| descending, ties by id. Header-only for no rows.
std::string emit_discrepancies(std::span<const Discrepancy> rows);
std::string emit_discrepancies(const ScenarioReport& report);

std::string emit_crossings_csv(const ScenarioReport& report);
std::string emit_mixes_csv(const ScenarioReport& report);

/// Report JSON document, schema "renewscen.report/1", two-space indent.
std::string emit_json(const ScenarioReport& report);

/// The scenario's own claims (crossing years, mixes, cost figures) next to
/// the values this run computed.
std::vector<Discrepancy> scenario_discrepancies(const ScenarioReport& report);

}  // namespace renewscen
