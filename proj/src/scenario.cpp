#include "renewscen/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

#include "renewscen/corpus/constants.hpp"
#include "renewscen/error.hpp"

namespace renewscen {

CombinedProjection::CombinedProjection(std::vector<TechnologyProfile> components)
    : components_(std::move(components)) {
  if (components_.empty()) throw Error(ErrorCode::EmptyCombination, "no technologies to combine");
  start_year_ = -std::numeric_limits<double>::infinity();
  for (const auto& c : components_) {
    if (!c.model()) throw Error(ErrorCode::MissingFit, "profile '" + c.name() + "' has no model");
    start_year_ = std::max(start_year_, window_of(*c.model()).first);
  }
}

double CombinedProjection::evaluate(double year) const {
  double total = 0.0;
  for (const auto& c : components_) total += c.generation_at(year);
  return total;
}

CombinedProjection combine(std::vector<TechnologyProfile> profiles) {
  return CombinedProjection(std::move(profiles));
}

std::vector<DemandThreshold> registered_thresholds() {
  const auto make = [](std::string name, std::string_view constant, double year) {
    const auto& c = get_constant(constant);
    return DemandThreshold{std::move(name), c.value, year, std::string(c.citation)};
  };
  return {
      make("electric_2026", "electric_threshold_2026", 2026.0),
      make("electric_2030", "electric_demand_2030", 2030.0),
      make("reduced_primary_2030", "reduced_primary_2030", 2030.0),
      make("primary_2030", "primary_demand_2030", 2030.0),
      make("primary_2032", "primary_threshold_2032", 2032.0),
  };
}

DemandThreshold find_threshold(const std::string& name) {
  for (auto& t : registered_thresholds()) {
    if (t.name == name) return t;
  }
  std::string known;
  for (const auto& t : registered_thresholds()) known += (known.empty() ? "" : ", ") + t.name;
  throw Error(ErrorCode::ConfigInvalid, "unknown threshold '" + name + "' (known: " + known + ")");
}

std::string_view to_string(CrossingStatus status) noexcept {
  switch (status) {
    case CrossingStatus::Crossed: return "crossed";
    case CrossingStatus::AlreadySatisfied: return "already_satisfied";
    case CrossingStatus::NotReached: return "not_reached";
  }
  return "?";
}

CrossingResult crossing_year(const CombinedProjection& projection, const DemandThreshold& threshold,
                             double horizon, std::optional<double> start) {
  const double t_start = start.value_or(projection.start_year());
  CrossingResult result{threshold.name, threshold.level, CrossingStatus::NotReached, std::nullopt,
                        t_start, horizon};

  // Grid in integer steps of the start year so no rounding drift accumulates.
  const auto steps = static_cast<long>(std::ceil((horizon - t_start) / kMonotoneGridStep));
  std::vector<double> grid_t;
  std::vector<double> grid_v;
  for (long i = 0; i <= std::max(0L, steps); ++i) {
    const double t = std::min(horizon, t_start + static_cast<double>(i) * kMonotoneGridStep);
    const double v = projection.evaluate(t);
    if (!grid_v.empty() && v < grid_v.back() * (1.0 - 1e-12)) {
      throw Error(ErrorCode::NonMonotoneProjection,
                  "projection decreases between " + format_number(grid_t.back()) + " and " +
                      format_number(t));
    }
    grid_t.push_back(t);
    grid_v.push_back(v);
  }

  if (grid_v.front() >= threshold.level) {
    result.status = CrossingStatus::AlreadySatisfied;
    result.year = t_start;
    return result;
  }
  if (grid_v.back() < threshold.level) return result;

  const auto hit = std::find_if(grid_v.begin(), grid_v.end(),
                                [&](double v) { return v >= threshold.level; });
  const auto idx = static_cast<std::size_t>(hit - grid_v.begin());
  double lo = grid_t[idx - 1];
  double hi = grid_t[idx];
  // Bracket shrinks far below the year tolerance; 200 halvings is a hard stop.
  for (int iter = 0; iter < 200 && hi - lo > kCrossingYearTolerance * 1e-3; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (projection.evaluate(mid) >= threshold.level) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  result.status = CrossingStatus::Crossed;
  result.year = 0.5 * (lo + hi);
  return result;
}

std::vector<MixEntry> mix_at_year(const CombinedProjection& projection, double year) {
  std::vector<MixEntry> out;
  double total = 0.0;
  for (const auto& c : projection.components()) {
    const double g = c.generation_at(year);
    out.push_back({c.name(), g, 0.0});
    total += g;
  }
  for (auto& e : out) e.share_percent = total > 0.0 ? 100.0 * e.generation / total : 0.0;
  return out;
}

double pv_wind_generation_crossover(const TechnologyProfile& pv, const TechnologyProfile& wind) {
  const auto exp_of = [](const TechnologyProfile& p) -> const ExponentialFit& {
    if (!p.model() || !std::holds_alternative<ExponentialFit>(*p.model())) {
      throw Error(ErrorCode::MissingFit, "profile '" + p.name() + "' needs a single exponential fit");
    }
    return std::get<ExponentialFit>(*p.model());
  };
  const auto& a = exp_of(pv);
  const auto& b = exp_of(wind);
  if (a.ln_slope == b.ln_slope) {
    throw Error(ErrorCode::ParallelGrowth, "'" + pv.name() + "' and '" + wind.name() +
                                               "' grow at the same rate");
  }
  // ln g(t) = ln(cf * 8.76) + intercept + slope * (t - t_ref); equate both
  // sides, measuring time from the pv reference year.
  const double t_ref = a.reference_year;
  const double ka = std::log(pv.capacity_factor()) + a.ln_intercept;
  const double kb = std::log(wind.capacity_factor()) + b.ln_intercept +
                    b.ln_slope * (t_ref - b.reference_year);
  return t_ref + (kb - ka) / (a.ln_slope - b.ln_slope);
}

}  // namespace renewscen
