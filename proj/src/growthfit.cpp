#include "renewscen/growthfit.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "renewscen/error.hpp"

namespace renewscen {

namespace detail {

LineFit least_squares_line(std::span<const double> x, std::span<const double> y, double x_ref) {
  const auto n = static_cast<double>(x.size());
  double xm = 0.0;
  double ym = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    xm += x[i];
    ym += y[i];
  }
  xm /= n;
  ym /= n;
  double sxx = 0.0;
  double sxy = 0.0;
  double syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = x[i] - xm;
    const double dy = y[i] - ym;
    sxx += dx * dx;
    sxy += dx * dy;
    syy += dy * dy;
  }
  const double slope = sxx > 0.0 ? sxy / sxx : 0.0;
  double sse = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double r = (y[i] - ym) - slope * (x[i] - xm);
    sse += r * r;
  }
  return {ym + slope * (x_ref - xm), slope, sse, syy};
}

}  // namespace detail

namespace {

std::vector<Sample> select(const CapacitySeries& series, const std::optional<YearRange>& window) {
  if (window) return series.in_range(*window);
  return {series.samples().begin(), series.samples().end()};
}

struct LogSamples {
  std::vector<double> years;
  std::vector<double> logs;
};

LogSamples to_log(std::span<const Sample> samples, const std::string& technology) {
  LogSamples out;
  out.years.reserve(samples.size());
  out.logs.reserve(samples.size());
  for (const auto& s : samples) {
    if (!(s.value > 0.0)) {
      throw Error(ErrorCode::NonPositiveValue,
                  "log fit of '" + technology + "' needs positive values, year " +
                      format_number(s.year) + " has " + format_number(s.value));
    }
    out.years.push_back(s.year);
    out.logs.push_back(std::log(s.value));
  }
  return out;
}

ExponentialFit fit_log_samples(std::span<const double> years, std::span<const double> logs) {
  const double t0 = years.front();
  const auto line = detail::least_squares_line(years, logs, t0);

  ExponentialFit fit;
  fit.reference_year = t0;
  fit.ln_intercept = line.intercept;
  fit.ln_slope = line.slope;
  fit.window = {years.front(), years.back()};
  fit.residuals.reserve(years.size());
  for (std::size_t i = 0; i < years.size(); ++i) {
    fit.residuals.push_back(logs[i] - (line.intercept + line.slope * (years[i] - t0)));
  }
  fit.rmse = std::sqrt(line.sse / static_cast<double>(years.size()));
  if (line.sst == 0.0) {
    fit.r_squared = line.sse == 0.0 ? 1.0 : 0.0;
  } else {
    fit.r_squared = std::clamp(1.0 - line.sse / line.sst, 0.0, 1.0);
  }
  return fit;
}

double sse_of(std::span<const double> years, std::span<const double> logs) {
  return detail::least_squares_line(years, logs, years.front()).sse;
}

}  // namespace

double ExponentialFit::value_at(double year) const {
  return std::exp(ln_intercept + ln_slope * (year - reference_year));
}

double PolynomialFit::value_at(double year) const {
  const double dt = year - reference_year;
  double acc = 0.0;
  for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) acc = acc * dt + *it;
  return acc;
}

double PiecewiseExponentialFit::value_at(double year) const {
  return year <= changepoint_year ? left.value_at(year) : right.value_at(year);
}

ExponentialFit fit_exponential(const CapacitySeries& series, std::optional<YearRange> window) {
  const auto samples = select(series, window);
  if (samples.size() < 2) {
    throw Error(ErrorCode::TooFewPoints, "exponential fit of '" + series.technology() +
                                             "' needs >= 2 samples, got " +
                                             std::to_string(samples.size()));
  }
  const auto ls = to_log(samples, series.technology());
  return fit_log_samples(ls.years, ls.logs);
}

PolynomialFit fit_polynomial(const CapacitySeries& series, int degree,
                             std::optional<YearRange> window) {
  if (degree < 1) throw Error(ErrorCode::DegreeZero, "polynomial degree must be >= 1");
  const auto samples = select(series, window);
  const auto n = samples.size();
  if (n < static_cast<std::size_t>(degree) + 1) {
    throw Error(ErrorCode::TooFewPoints, "degree " + std::to_string(degree) + " fit of '" +
                                             series.technology() + "' needs >= " +
                                             std::to_string(degree + 1) + " samples");
  }

  const double t0 = samples.front().year;
  // Scale time to [0, 1] so the Vandermonde matrix stays well conditioned.
  const double scale = std::max(1.0, samples.back().year - t0);
  Eigen::MatrixXd a(n, degree + 1);
  Eigen::VectorXd b(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double s = (samples[i].year - t0) / scale;
    double p = 1.0;
    for (int j = 0; j <= degree; ++j) {
      a(static_cast<Eigen::Index>(i), j) = p;
      p *= s;
    }
    b(static_cast<Eigen::Index>(i)) = samples[i].value;
  }
  const Eigen::VectorXd scaled = a.colPivHouseholderQr().solve(b);

  PolynomialFit fit;
  fit.reference_year = t0;
  fit.degree = degree;
  fit.window = {t0, samples.back().year};
  fit.coefficients.resize(static_cast<std::size_t>(degree) + 1);
  double factor = 1.0;
  for (int j = 0; j <= degree; ++j) {
    fit.coefficients[static_cast<std::size_t>(j)] = scaled(j) / factor;
    factor *= scale;
  }
  double sse = 0.0;
  for (const auto& s : samples) {
    const double r = s.value - fit.value_at(s.year);
    sse += r * r;
  }
  fit.rmse = std::sqrt(sse / static_cast<double>(n));
  return fit;
}

PiecewiseExponentialFit detect_changepoint(const CapacitySeries& series, std::size_t min_segment,
                                           std::optional<YearRange> window) {
  if (min_segment < 3) {
    throw Error(ErrorCode::TooFewPoints, "min_segment must be >= 3");
  }
  const auto samples = select(series, window);
  const auto n = samples.size();
  if (n < 2 * min_segment) {
    throw Error(ErrorCode::TooFewPoints, "changepoint scan of '" + series.technology() + "' needs >= " +
                                             std::to_string(2 * min_segment) + " samples, got " +
                                             std::to_string(n));
  }
  const auto ls = to_log(samples, series.technology());
  const std::span<const double> years(ls.years);
  const std::span<const double> logs(ls.logs);

  std::size_t best_split = min_segment;
  double best_sse = std::numeric_limits<double>::infinity();
  for (std::size_t k = min_segment; k + min_segment <= n; ++k) {
    const double sse = sse_of(years.first(k), logs.first(k)) +
                       sse_of(years.subspan(k), logs.subspan(k));
    if (sse < best_sse) {
      best_sse = sse;
      best_split = k;
    }
  }

  const auto single = detail::least_squares_line(years, logs, years.front());
  PiecewiseExponentialFit fit;
  fit.changepoint_year = years[best_split - 1];
  fit.left = fit_log_samples(years.first(best_split), logs.first(best_split));
  fit.right = fit_log_samples(years.subspan(best_split), logs.subspan(best_split));
  fit.sse_piecewise = best_sse;
  fit.sse_single = single.sse;
  // A single line that already fits to rounding level leaves nothing to improve.
  if (single.sse <= 1e-20 * std::max(1.0, single.sst)) {
    fit.improvement_ratio = 0.0;
  } else {
    fit.improvement_ratio = 1.0 - best_sse / single.sse;
  }
  return fit;
}

YearRange window_of(const GrowthModel& model) noexcept {
  return std::visit(
      [](const auto& m) -> YearRange {
        if constexpr (std::is_same_v<std::decay_t<decltype(m)>, PiecewiseExponentialFit>) {
          return m.window();
        } else {
          return m.window;
        }
      },
      model);
}

double evaluate(const GrowthModel& model, double year) {
  return std::visit([year](const auto& m) { return m.value_at(year); }, model);
}

Extrapolation extrapolate(const GrowthModel& model, double year) {
  const auto window = window_of(model);
  if (year < window.first) {
    throw Error(ErrorCode::YearBeforeWindow, "year " + format_number(year) +
                                                 " precedes fit window start " +
                                                 format_number(window.first));
  }
  return {evaluate(model, year), year > window.last + kHorizonWarningYears};
}

double doubling_time(const ExponentialFit& fit) {
  if (!(fit.ln_slope > 0.0)) {
    throw Error(ErrorCode::NonGrowingSeries,
                "growth rate " + format_number(fit.ln_slope) + " /yr is not positive");
  }
  return std::numbers::ln2 / fit.ln_slope;
}

std::string residual_sign_pattern(const ExponentialFit& fit) {
  std::string out;
  out.reserve(fit.residuals.size());
  for (double r : fit.residuals) out.push_back(r > 0.0 ? '+' : (r < 0.0 ? '-' : '0'));
  return out;
}

}  // namespace renewscen
