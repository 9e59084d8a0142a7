#pragma once

#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "renewscen/corpus/series.hpp"

namespace renewscen {

/// value(t) = exp(ln_intercept + ln_slope * (t - reference_year)).
/// Fitted by ordinary least squares on (year, ln value).
struct ExponentialFit {
  double reference_year = 0.0;
  double ln_intercept = 0.0;
  double ln_slope = 0.0;
  double r_squared = 0.0;  ///< log space
  double rmse = 0.0;       ///< log space
  YearRange window{};
  /// ln(observed) - ln(model), one per sample in the window.
  std::vector<double> residuals;

  double value_at(double year) const;
};

/// value(t) = sum_i coefficients[i] * (t - reference_year)^i.
struct PolynomialFit {
  double reference_year = 0.0;
  std::vector<double> coefficients;
  int degree = 1;
  double rmse = 0.0;
  YearRange window{};

  double value_at(double year) const;
};

/// Two exponential regimes joined at `changepoint_year`, the year of the last
/// sample belonging to the left segment.
struct PiecewiseExponentialFit {
  double changepoint_year = 0.0;
  ExponentialFit left;
  ExponentialFit right;
  double sse_piecewise = 0.0;
  double sse_single = 0.0;
  double improvement_ratio = 0.0;  ///< 1 - sse_piecewise / sse_single

  bool is_regime_change(double threshold = 0.5) const noexcept {
    return improvement_ratio >= threshold;
  }
  double value_at(double year) const;
  YearRange window() const noexcept { return {left.window.first, right.window.last}; }
};

using GrowthModel = std::variant<ExponentialFit, PolynomialFit, PiecewiseExponentialFit>;

/// Years beyond the data window after which an extrapolation is flagged.
inline constexpr double kHorizonWarningYears = 15.0;

struct Extrapolation {
  double value;
  bool horizon_warning;
};

/// Throws Error(TooFewPoints) for < 2 samples in the window and
/// Error(NonPositiveValue) if any sample is <= 0.
ExponentialFit fit_exponential(const CapacitySeries& series,
                               std::optional<YearRange> window = std::nullopt);

/// Least-squares polynomial; interpolates exactly when samples == degree + 1.
PolynomialFit fit_polynomial(const CapacitySeries& series, int degree,
                             std::optional<YearRange> window = std::nullopt);

/// Exhaustive scan over every split with at least `min_segment` samples on each
/// side, minimising total log-space SSE. Significance is left to the caller.
PiecewiseExponentialFit detect_changepoint(const CapacitySeries& series,
                                           std::size_t min_segment = 3,
                                           std::optional<YearRange> window = std::nullopt);

YearRange window_of(const GrowthModel& model) noexcept;
double evaluate(const GrowthModel& model, double year);

/// Model value at `year`. Throws Error(YearBeforeWindow) before the window start.
Extrapolation extrapolate(const GrowthModel& model, double year);

/// ln 2 / slope. Throws Error(NonGrowingSeries) unless slope > 0.
double doubling_time(const ExponentialFit& fit);

/// Compact "+-" string of residual signs, one character per sample.
std::string residual_sign_pattern(const ExponentialFit& fit);

namespace detail {

struct LineFit {
  double intercept;  ///< at x = x_ref
  double slope;
  double sse;
  double sst;
};

/// OLS of y on (x - x_ref), computed around the sample means.
LineFit least_squares_line(std::span<const double> x, std::span<const double> y, double x_ref);

}  // namespace detail

}  // namespace renewscen
