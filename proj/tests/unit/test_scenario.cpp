#include <catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "renewscen/error.hpp"
#include "renewscen/scenario.hpp"

using namespace renewscen;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

// value(t) = exp(a + b (t - t0)) GW, window [t0, t0 + 10].
TechnologyProfile exp_profile(std::string name, double a, double b, double t0, double cf) {
  ExponentialFit f;
  f.reference_year = t0;
  f.ln_intercept = a;
  f.ln_slope = b;
  f.window = {t0, t0 + 10};
  CapacitySeries s(name, QuantityKind::InstalledPower, Unit::GW,
                   {{t0, std::exp(a)}, {t0 + 10, std::exp(a + 10 * b)}});
  return TechnologyProfile(std::move(name), cf, std::move(s), GrowthModel{f});
}

DemandThreshold level(double twh) { return {"test", twh, 2030, "test"}; }

// Independent closed form for a single exponential.
double closed_form(double a, double b, double t0, double cf, double twh) {
  return (std::log(twh * 1000.0 / (cf * 8760.0)) - a) / b + t0;
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

TEST_CASE("registered thresholds") {
  auto all = registered_thresholds();
  CHECK(all.size() == 5);
  CHECK(find_threshold("electric_2026").level == 33000);
  CHECK(find_threshold("reduced_primary_2030").level == 106950);
  CHECK(find_threshold("primary_2032").level == 198000);
  CHECK(find_threshold("electric_2030").level == 35000);
  CHECK(find_threshold("primary_2030").level == 186000);
  CHECK(code_of([] { find_threshold("nope"); }) == ErrorCode::ConfigInvalid);
}

TEST_CASE("combination identity and additivity") {
  auto p = exp_profile("pv", 0.0, 0.3, 2000, 0.25);
  auto one = combine({p});
  auto two = combine({p, p});
  for (double t = 2000; t <= 2040; t += 0.7) {
    CHECK(one.evaluate(t) == p.generation_at(t));
    CHECK_THAT(two.evaluate(t), WithinRel(2.0 * p.generation_at(t), 1e-12));
  }
  CHECK(code_of([] { combine({}); }) == ErrorCode::EmptyCombination);
}

TEST_CASE("combination start is the latest window start") {
  auto a = exp_profile("a", 0.0, 0.3, 2000, 0.25);
  auto b = exp_profile("b", 0.0, 0.3, 2005, 0.25);
  CHECK(combine({a, b}).start_year() == 2005);
}

TEST_CASE("doubling projection crossing") {
  auto p = exp_profile("x", 0.0, std::log(2.0), 2000, 1.0);
  auto r = crossing_year(combine({p}), level(8960), 2050);
  REQUIRE(r.status == CrossingStatus::Crossed);
  const double expected = 2000 + std::log2(8960.0 / 8.76);
  CHECK_THAT(*r.year, WithinAbs(expected, 1e-6));
  CHECK_THAT(*r.year, WithinAbs(2009.998352, 1e-6));
}

TEST_CASE("already satisfied and not reached") {
  auto p = exp_profile("x", 0.0, std::log(2.0), 2000, 1.0);
  auto sat = crossing_year(combine({p}), level(1.0), 2050);
  CHECK(sat.status == CrossingStatus::AlreadySatisfied);
  REQUIRE(sat.year);
  CHECK(*sat.year == 2000);
  auto nr = crossing_year(combine({p}), level(1e12), 2020);
  CHECK(nr.status == CrossingStatus::NotReached);
  CHECK_FALSE(nr.year);
  CHECK(to_string(CrossingStatus::NotReached) == "not_reached");
}

TEST_CASE("decreasing projection is rejected") {
  auto p = exp_profile("x", 5.0, -0.2, 2000, 1.0);
  CHECK(code_of([&] { crossing_year(combine({p}), level(1e9), 2050); }) ==
        ErrorCode::NonMonotoneProjection);
}

TEST_CASE("bisection equals the closed form on random exponentials") {
  std::mt19937_64 rng(123);
  std::uniform_real_distribution<double> a_dist(-2, 6), b_dist(0.02, 0.9), cf_dist(0.1, 1.0),
      t_dist(1990, 2015);
  int crossed = 0;
  for (int i = 0; i < 500; ++i) {
    double a = a_dist(rng), b = b_dist(rng), cf = cf_dist(rng), t0 = std::floor(t_dist(rng));
    auto p = exp_profile("x", a, b, t0, cf);
    double start_value = p.generation_at(t0);
    double target_year = t0 + std::uniform_real_distribution<double>(0.5, 40)(rng);
    double twh = p.generation_at(target_year);
    auto r = crossing_year(combine({p}), level(twh), 2100);
    REQUIRE(twh > start_value);
    REQUIRE(r.status == CrossingStatus::Crossed);
    REQUIRE_THAT(*r.year, WithinAbs(closed_form(a, b, t0, cf, twh), 1e-6));
    ++crossed;
  }
  CHECK(crossed == 500);
}

TEST_CASE("threshold monotonicity and adding components") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> a_dist(0, 4), b_dist(0.05, 0.6), cf_dist(0.1, 0.9);
  for (int i = 0; i < 200; ++i) {
    auto p = exp_profile("p", a_dist(rng), b_dist(rng), 2000, cf_dist(rng));
    auto q = exp_profile("q", a_dist(rng), b_dist(rng), 2000, cf_dist(rng));
    double l1 = std::exp(std::uniform_real_distribution<double>(4, 10)(rng));
    double l2 = l1 * std::uniform_real_distribution<double>(1.0, 10.0)(rng);
    auto alone = combine({p});
    auto both = combine({p, q});
    auto r1 = crossing_year(alone, level(l1), 2200);
    auto r2 = crossing_year(alone, level(l2), 2200);
    REQUIRE(r1.year);
    REQUIRE(r2.year);
    CHECK(*r1.year <= *r2.year);
    auto rb = crossing_year(both, level(l1), 2200);
    REQUIRE(rb.year);
    CHECK(*rb.year <= *r1.year + 1e-6);
  }
}

TEST_CASE("mix shares") {
  auto p = exp_profile("pv", 1.0, 0.3, 2000, 0.25);
  auto single = mix_at_year(combine({p}), 2025);
  REQUIRE(single.size() == 1);
  CHECK_THAT(single[0].share_percent, WithinAbs(100.0, 1e-12));

  auto q = exp_profile("wind", 1.0, 0.3, 2000, 0.25);
  auto even = mix_at_year(combine({p, q}), 2025);
  CHECK_THAT(even[0].share_percent, WithinAbs(50.0, 1e-12));
  CHECK_THAT(even[1].share_percent, WithinAbs(50.0, 1e-12));

  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> a_dist(-1, 5), b_dist(0.0, 0.6), cf_dist(0.05, 1.0);
  for (int i = 0; i < 500; ++i) {
    std::vector<TechnologyProfile> ps;
    int n = 1 + i % 4;
    for (int k = 0; k < n; ++k) ps.push_back(exp_profile("t" + std::to_string(k), a_dist(rng), b_dist(rng), 2000, cf_dist(rng)));
    auto mix = mix_at_year(combine(ps), 2000 + i % 40);
    double sum = 0;
    for (const auto& e : mix) sum += e.share_percent;
    REQUIRE_THAT(sum, WithinAbs(100.0, 1e-9));
  }
  CHECK(code_of([&] { mix_at_year(combine({p}), 1990); }) == ErrorCode::YearBeforeWindow);
}

TEST_CASE("generation crossover") {
  auto pv = exp_profile("pv", 0.0, std::log(2.0), 2000, 0.3);
  auto wind = exp_profile("wind", std::log(4.0), std::log(1.5), 2000, 0.3);
  double expected = 2000 + std::log(4.0) / std::log(4.0 / 3.0);
  CHECK_THAT(pv_wind_generation_crossover(pv, wind), WithinAbs(expected, 1e-12));
  CHECK_THAT(pv_wind_generation_crossover(pv, wind), WithinAbs(2004.819, 1e-3));
  CHECK(code_of([&] { pv_wind_generation_crossover(pv, pv); }) == ErrorCode::ParallelGrowth);
}

TEST_CASE("crossover with different reference years and factors") {
  auto pv = exp_profile("pv", 0.5, 0.35, 2003, 0.2);
  auto wind = exp_profile("wind", 3.0, 0.15, 1996, 0.35);
  double t = pv_wind_generation_crossover(pv, wind);
  CHECK_THAT(pv.generation_at(t), WithinRel(wind.generation_at(t), 1e-10));
}
