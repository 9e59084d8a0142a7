#include <catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "renewscen/error.hpp"
#include "renewscen/learncurve.hpp"

using namespace renewscen;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

CostSeries curve(std::vector<Sample> s) {
  return CostSeries("pv", CostAxis::CumulativeGeneration, Unit::USDPerMWh, std::move(s));
}

CostSeries by_year(std::vector<Sample> s) {
  return CostSeries("pv", CostAxis::Year, Unit::USDPerMWh, std::move(s));
}

LearningCurveFit line(double intercept, double slope) {
  LearningCurveFit f;
  f.log10_intercept = intercept;
  f.log10_slope = slope;
  f.x_min = 1;
  f.x_max = 10;
  return f;
}

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::ParseError;
}

}  // namespace

TEST_CASE("two-point learning curve") {
  auto f = fit_learning_curve(curve({{10, 100}, {100, 80}}));
  CHECK_THAT(f.log10_slope, WithinAbs(std::log10(0.8), 1e-12));
  CHECK_THAT(f.log10_slope, WithinAbs(-0.09691, 1e-5));
  CHECK(f.x_min == 10);
  CHECK(f.x_max == 100);
}

TEST_CASE("flat cost has zero slope and zero learning rate") {
  auto f = fit_learning_curve(curve({{1, 42}, {10, 42}}));
  CHECK(f.log10_slope == 0.0);
  CHECK(learning_rate(f) == 0.0);
}

TEST_CASE("learning curve errors") {
  CHECK(code_of([] { fit_learning_curve(curve({{10, 100}})); }) == ErrorCode::TooFewPoints);
  CHECK(code_of([] { curve({{0, 100}, {10, 90}}); }) == ErrorCode::NonPositiveX);
  CHECK(code_of([] { curve({{1, -5}, {10, 90}}); }) == ErrorCode::NonPositiveValue);
  CHECK(code_of([] { learning_rate(line(1, 0.1)); }) == ErrorCode::PositiveSlope);
  CHECK(code_of([] { cost_at(line(1, -0.1), 0.0); }) == ErrorCode::NonPositiveX);
  CHECK(code_of([] { curve_crossing(line(2, -0.3), line(2, -0.3)); }) == ErrorCode::ParallelLines);
  CHECK(code_of([] { fit_time_decay(by_year({{2000, 3}})); }) == ErrorCode::TooFewPoints);
}

TEST_CASE("twenty percent per doubling") {
  const double slope = std::log2(0.8);
  CHECK_THAT(slope, WithinAbs(-0.32193, 1e-5));
  CHECK_THAT(learning_rate(line(3, slope)), WithinAbs(0.20, 1e-12));
  std::vector<Sample> s;
  for (double x = 1; x <= 1024; x *= 2) s.push_back({x, 1000 * std::pow(0.8, std::log2(x))});
  CHECK_THAT(learning_rate(fit_learning_curve(curve(s))), WithinAbs(0.20, 1e-12));
}

TEST_CASE("cost evaluation") {
  auto f = fit_learning_curve(curve({{10, 100}, {30, 70}, {100, 60}}));
  auto last = cost_at(f, 100);
  CHECK_THAT(last.cost, WithinRel(std::pow(10.0, f.log10_intercept + f.log10_slope * 2), 1e-14));
  CHECK_FALSE(last.extrapolated);
  CHECK(cost_at(f, 1000).extrapolated);
  for (double x : {0.5, 7.0, 300.0, 1e5})
    CHECK_THAT(cost_at(f, 2 * x).cost, WithinRel(cost_at(f, x).cost * std::exp2(f.log10_slope), 1e-12));
  auto cheap = cost_at(line(0, -1), 1e3);
  CHECK(cheap.below_floor);
}

TEST_CASE("analytic line crossing") {
  auto c = curve_crossing(line(3, -0.5), line(2, -0.2));
  CHECK_THAT(std::log10(c.x), WithinAbs(10.0 / 3.0, 1e-12));
  CHECK_THAT(c.x, WithinRel(2154.43, 1e-5));
}

TEST_CASE("crossing properties on random lines") {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> icpt(0.5, 4.0), slope(-0.9, -0.01);
  for (int i = 0; i < 500; ++i) {
    auto a = line(icpt(rng), slope(rng));
    auto b = line(icpt(rng), slope(rng));
    if (std::abs(a.log10_slope - b.log10_slope) < 0.05) continue;
    auto c = curve_crossing(a, b);
    REQUIRE_THAT(cost_at(a, c.x).cost, WithinRel(cost_at(b, c.x).cost, 1e-9));
    REQUIRE_THAT(c.cost, WithinRel(cost_at(a, c.x).cost, 1e-9));
    // a steeper and dearer at x = 1 => the lines meet to the right of 1
    if (a.log10_slope < b.log10_slope && a.log10_intercept > b.log10_intercept) REQUIRE(c.x > 1.0);
  }
}

TEST_CASE("axis rescaling leaves the slope unchanged") {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> noise(-0.05, 0.05), k_dist(-3, 3);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Sample> s, sx, sc;
    double kx = std::pow(10.0, k_dist(rng)), kc = std::pow(10.0, k_dist(rng));
    for (int i = 0; i < 11; ++i) {
      double x = std::pow(10.0, 1 + 0.2 * i);
      double c = 300 * std::pow(x, -0.4) * std::pow(10.0, noise(rng));
      s.push_back({x, c});
      sx.push_back({x * kx, c});
      sc.push_back({x, c * kc});
    }
    auto f = fit_learning_curve(curve(s));
    auto fx = fit_learning_curve(curve(sx));
    auto fc = fit_learning_curve(curve(sc));
    REQUIRE_THAT(fx.log10_slope, WithinAbs(f.log10_slope, 1e-12));
    REQUIRE_THAT(fc.log10_slope, WithinAbs(f.log10_slope, 1e-12));
    REQUIRE_THAT(fx.log10_intercept, WithinAbs(f.log10_intercept - f.log10_slope * std::log10(kx), 1e-12));
    REQUIRE_THAT(learning_rate(fx), WithinAbs(learning_rate(f), 1e-12));
  }
}

TEST_CASE("time decay") {
  std::vector<Sample> halves;
  for (int y = 2010; y <= 2015; ++y) halves.push_back({double(y), 1024.0 / std::exp2(y - 2010)});
  auto f = fit_time_decay(by_year(halves));
  CHECK_THAT(f.annual_factor, WithinRel(0.5, 1e-12));
  CHECK_THAT(f.cost_at(2016), WithinRel(16.0, 1e-10));

  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> r_dist(0.3, 1.2), c_dist(1, 1000);
  for (int i = 0; i < 200; ++i) {
    double r = r_dist(rng), c0 = c_dist(rng);
    std::vector<Sample> s;
    for (int k = 0; k < 12; ++k) s.push_back({2005.0 + k, c0 * std::pow(r, k)});
    REQUIRE_THAT(fit_time_decay(by_year(s)).annual_factor, WithinRel(r, 1e-9));
  }
}

TEST_CASE("cost joins onto generation capability by year") {
  CapacitySeries cap("pv", QuantityKind::InstalledPower, Unit::GW, {{2009, 10}, {2010, 20}, {2011, 40}});
  TechnologyProfile profile("pv", 0.25, cap);
  auto joined = join_cost_to_generation(by_year({{2009, 300}, {2011, 150}}), profile);
  REQUIRE(joined.samples().size() == 2);
  CHECK(joined.axis() == CostAxis::CumulativeGeneration);
  CHECK_THAT(joined.samples()[0].year, WithinRel(generation_capability(10, 0.25), 1e-15));
  CHECK(joined.samples()[1].value == 150);
  CHECK(code_of([&] { join_cost_to_generation(by_year({{2012, 1}, {2013, 2}}), profile); }) ==
        ErrorCode::DatasetMissing);
}
