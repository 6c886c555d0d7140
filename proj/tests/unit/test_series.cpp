#include "rampsi/constants.hpp"
#include "rampsi/errors.hpp"
#include "rampsi/oracles.hpp"
#include "rampsi/planner.hpp"
#include "rampsi/series.hpp"

#include <doctest.h>

#include <cmath>

using rampsi::EvalParams;
using rampsi::SeriesValue;
using rampsi::kPi;
using rampsi::kTwoPi;
namespace oracle = rampsi::oracle;

namespace {

const double kGamma = -oracle::digamma(1.0);

EvalParams with_terms(int k) {
  EvalParams p;
  p.k_terms = k;
  return p;
}

}  // namespace

TEST_CASE("EvalParams validation") {
  EvalParams p;
  CHECK_NOTHROW(p.validate());
  p.tol = 1e-16;
  CHECK_THROWS_AS(p.validate(), rampsi::DomainError);
  p = {};
  p.k_terms = 0;
  CHECK_THROWS_AS(p.validate(), rampsi::DomainError);
  p = {};
  p.n_terms = 0;
  CHECK_THROWS_AS(p.validate(), rampsi::DomainError);
  p = {};
  p.guard_delta = 0.25;
  CHECK_THROWS_AS(p.validate(), rampsi::DomainError);
  p.guard_delta = 0.0;
  CHECK_THROWS_AS(p.validate(), rampsi::DomainError);
}

TEST_CASE("psi_ramanujan examples") {
  const SeriesValue a = rampsi::psi_ramanujan(2.5, rampsi::plan(1e-13, 2.5));
  EvalParams eight = rampsi::plan(1e-13, 2.5);
  eight.k_terms = 8;
  CHECK(std::abs(rampsi::psi_ramanujan(2.5, eight).value - oracle::psi(2.5)) <= 1e-12);
  CHECK(std::abs(a.value - oracle::psi(2.5)) <= 1e-12);

  const SeriesValue one = rampsi::psi_ramanujan(1.0, rampsi::plan(1e-13, 1.0));
  CHECK(std::abs(one.value - 0.4227843350984) <= 1e-13);
  CHECK(std::abs(rampsi::psi_ramanujan(0.5, rampsi::plan(1e-13, 0.5)).value - oracle::psi(0.5)) <= 1e-12);

  CHECK_THROWS_AS(rampsi::psi_ramanujan(0.0, EvalParams{}), rampsi::DomainError);
  CHECK_THROWS_AS(rampsi::psi_ramanujan(-3.0, EvalParams{}), rampsi::DomainError);
}

TEST_CASE("psi_ramanujan at and around integers") {
  for (long m : {1L, 2L, 3L, 7L}) {
    const double dm = static_cast<double>(m);
    for (double t : {0.0, 1e-12, -1e-9, 3e-7, -5e-5, 9.99e-4}) {
      const double x = dm + t;
      const SeriesValue v = rampsi::psi_ramanujan(x, rampsi::plan(1e-13, x));
      CHECK_MESSAGE(std::abs(v.value - oracle::psi(x)) <= v.error_estimate + 1e-14, "x = " << x);
    }
  }
}

TEST_CASE("guard switch is continuous") {
  for (long m : {1L, 2L, 3L}) {
    const double dm = static_cast<double>(m);
    const EvalParams p = rampsi::plan(1e-13, dm);
    const double centre = rampsi::psi_ramanujan(dm, p).value;
    for (double side : {-1.0, 1.0}) {
      const double inside = rampsi::psi_ramanujan(dm + side * 0.999 * p.guard_delta, p).value;
      const double outside = rampsi::psi_ramanujan(dm + side * 1.01 * p.guard_delta, p).value;
      CHECK(std::abs(outside - centre) <= 10.0 * p.guard_delta);
      // Across the switch the value moves only by psi' times the step.
      CHECK(std::abs(outside - inside) <= 0.02 * p.guard_delta);
    }
  }
}

TEST_CASE("a wider guard band changes nothing but the code path") {
  for (double x : {1.004, 2.03, 2.97}) {
    EvalParams wide = rampsi::plan(1e-13, x, 0.2);
    const SeriesValue banded = rampsi::psi_ramanujan(x, wide);
    CHECK_MESSAGE(std::abs(banded.value - oracle::psi(x)) <= banded.error_estimate + 1e-14, "x = " << x);
  }
}

TEST_CASE("double series") {
  for (double x : {0.3, 1.2}) {
    const SeriesValue s = rampsi::double_series_s(x, rampsi::plan(1e-13, x));
    CHECK(std::abs(s.value - oracle::s_integral(x).value) <= 1e-9);
  }
  // At an integer only the cosine sums survive: S(m) = -2 pi sum_k k e^{-2 pi k m} H(k).
  const SeriesValue at_two = rampsi::double_series_s(2.0, with_terms(8));
  double expected = 0.0;
  for (int k = 1; k <= 8; ++k) expected -= kTwoPi * k * std::exp(-kTwoPi * k * 2.0) * oracle::k2_harmonic_sum(k);
  CHECK(at_two.value == doctest::Approx(expected).epsilon(1e-15));
  CHECK_THROWS_AS(rampsi::double_series_s(0.0, EvalParams{}), rampsi::DomainError);
}

TEST_CASE("double series at small x uses the integrated outer tail") {
  for (double x : {0.02, 0.08, 0.25}) {
    const EvalParams p = rampsi::plan(1e-12, x);
    const SeriesValue s = rampsi::double_series_s(x, p);
    CHECK(s.k_used <= 10);
    CHECK_MESSAGE(std::abs(s.value - oracle::s_integral(x, 48).value) <= 1e-10, "x = " << x);
  }
}

TEST_CASE("gamma at integer limit points") {
  const rampsi::EulerGamma five = rampsi::gamma_at_integer(1, with_terms(5));
  CHECK(five.source == rampsi::GammaSource::integer_limit);
  // The printed thirteen places are 1 - gamma truncated, not rounded.
  CHECK(std::abs(five.series_value - (1.0 - kGamma)) <= 5e-14);
  CHECK(std::floor(five.series_value * 1e13) == 4227843350984.0);
  CHECK(std::abs(five.value - kGamma) <= 1e-10);

  const rampsi::EulerGamma two = rampsi::gamma_at_integer(2, rampsi::plan(1e-13, 2.0));
  CHECK(std::abs(two.value - kGamma) <= 1e-11);

  const rampsi::EulerGamma three = rampsi::gamma_at_integer(3, rampsi::plan(1e-13, 3.0));
  const rampsi::EulerGamma first = rampsi::gamma_at_integer(1, rampsi::plan(1e-13, 1.0));
  CHECK(std::abs(first.value - three.value) <= first.error_estimate + three.error_estimate);

  CHECK(std::abs(rampsi::gamma_at_integer(12, rampsi::plan(1e-13, 12.0)).value - kGamma) <= 1e-12);
  CHECK_THROWS_AS(rampsi::gamma_at_integer(0, EvalParams{}), rampsi::DomainError);
}

TEST_CASE("the two printed forms of the integer limit agree") {
  for (long m = 1; m <= 6; ++m) {
    const rampsi::LimitForms f = rampsi::singular_pair_limit_forms(m);
    CHECK(f.csch_form == doctest::Approx(f.exp_form).epsilon(1e-14));
  }
}

TEST_CASE("gamma at any x") {
  for (double x : {0.5, 3.25}) {
    const rampsi::EulerGamma g = rampsi::gamma_any_x(x, rampsi::plan(1e-13, x));
    CHECK(g.source == rampsi::GammaSource::any_x);
    CHECK(std::abs(g.value - kGamma) <= 1e-11);
  }
  const rampsi::EulerGamma a = rampsi::gamma_any_x(0.5, rampsi::plan(1e-13, 0.5));
  const rampsi::EulerGamma b = rampsi::gamma_any_x(7.5, rampsi::plan(1e-13, 7.5));
  CHECK(std::abs(a.value - b.value) <= a.error_estimate + b.error_estimate);

  try {
    rampsi::gamma_any_x(2.0005, EvalParams{});
    FAIL("expected a guard-band rejection");
  } catch (const rampsi::GuardBandError& e) {
    CHECK(e.nearest_integer() == 2);
  }
}

TEST_CASE("Re psi(1 + ix)") {
  for (double x : {1.5, 0.5}) {
    const SeriesValue v = rampsi::re_psi_complex_ramanujan(x, rampsi::plan(1e-13, x));
    CHECK(std::abs(v.value - oracle::re_psi_one_plus_ik(x)) <= 1e-10);
  }
  const double x = 2.6;
  const EvalParams p = rampsi::plan(1e-13, x);
  const double sum = rampsi::gamma_any_x(x, p).value + rampsi::re_psi_complex_ramanujan(x, p).value;
  CHECK(std::abs(sum - oracle::k2_harmonic_sum(x)) <= 1e-14);
  CHECK_THROWS_AS(rampsi::re_psi_complex_ramanujan(3.0, EvalParams{}), rampsi::GuardBandError);
}

TEST_CASE("psi prime") {
  const SeriesValue half = rampsi::psi_prime_ramanujan(0.5, rampsi::plan(1e-13, 0.5));
  CHECK(std::abs(half.value - (kPi * kPi / 2.0 - 4.0)) <= 1e-10);

  const double x = 2.3, h = 1e-5;
  const double fd = (oracle::psi(x + h) - oracle::psi(x - h)) / (2.0 * h);
  CHECK(std::abs(rampsi::psi_prime_ramanujan(x, rampsi::plan(1e-13, x)).value - fd) <= 1e-8);

  const SeriesValue small = rampsi::psi_prime_ramanujan(0.01, rampsi::plan(1e-13, 0.01));
  CHECK(std::abs(small.value - kPi * kPi / 6.0) <= 0.03);
  CHECK(std::abs(small.value - (oracle::psi(0.01 + 1e-6) - oracle::psi(0.01 - 1e-6)) / 2e-6) <= 1e-6);

  CHECK_THROWS_AS(rampsi::psi_prime_ramanujan(1.0, EvalParams{}), rampsi::GuardBandError);
  CHECK_THROWS_AS(rampsi::psi_prime_ramanujan(-1.0, EvalParams{}), rampsi::DomainError);
}

TEST_CASE("asymptotic residual") {
  const EvalParams p;
  const double r10 = rampsi::asymptotic_residual(10.5, p);
  const double r20 = rampsi::asymptotic_residual(20.5, p);
  double calibrated = 0.0;
  for (int n = 2; n <= 20; ++n) calibrated = std::max(calibrated, (n + 0.5) * std::abs(rampsi::asymptotic_residual(n + 0.5, p)));
  calibrated *= 2.0;
  CHECK(std::abs(r10) <= calibrated / 10.5);
  CHECK(std::abs(r20) <= std::abs(r10) * (1.05 * 10.5 / 20.5));
  CHECK(std::abs(rampsi::asymptotic_coefficient_residual(p)) <= 1e-13);
  CHECK_THROWS_AS(rampsi::asymptotic_residual(10.0, p), rampsi::DomainError);
  CHECK_THROWS_AS(rampsi::asymptotic_residual(0.5, p), rampsi::DomainError);
}
