#include "generators.hpp"
#include "rampsi/constants.hpp"
#include "rampsi/oracles.hpp"
#include "rampsi/planner.hpp"
#include "rampsi/series.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

using rampsi::EvalParams;
using rampsi::SeriesValue;
namespace oracle = rampsi::oracle;
namespace gen = rampsi::testing;

TEST_CASE("psi agrees with the oracle on a quasi-random grid") {
  int checked = 0;
  for (std::uint64_t i = 1; checked < 50; ++i) {
    const double x = 0.05 + (25.0 - 0.05) * gen::halton(i, 2);
    if (gen::near_positive_integer(x, 1e-3)) continue;
    const SeriesValue v = rampsi::psi_ramanujan(x, rampsi::plan(1e-13, x));
    CHECK_MESSAGE(std::abs(v.value - oracle::psi(x)) <= v.error_estimate + 1e-12, "x = " << x);
    ++checked;
  }
}

TEST_CASE("partial fractions connect psi and the any-x gamma") {
  for (double x : {0.3, 1.7, 4.2}) {
    const EvalParams p = rampsi::plan(1e-13, x);
    const SeriesValue psi = rampsi::psi_ramanujan(x, p);
    const SeriesValue pf = rampsi::psi_plus_gamma_partial_fractions(x, p);
    const rampsi::EulerGamma g = rampsi::gamma_any_x(x, p);
    const double combined = psi.error_estimate + pf.error_estimate + g.error_estimate;
    CHECK_MESSAGE(std::abs((psi.value - pf.value) + g.value) <= 2.0 * combined + 1e-14, "x = " << x);
  }
}

TEST_CASE("psi' matches central differences") {
  const double h = 1e-5;
  for (double x : {0.4, 1.6, 3.3}) {
    const EvalParams p = rampsi::plan(1e-13, x);
    const double fd =
        (rampsi::psi_ramanujan(x + h, p).value - rampsi::psi_ramanujan(x - h, p).value) / (2.0 * h);
    CHECK_MESSAGE(std::abs(rampsi::psi_prime_ramanujan(x, p).value - fd) <= 1e-7, "x = " << x);
  }
}

TEST_CASE("first Taylor coefficient of psi' is -2 zeta(3)") {
  const double zeta2 = rampsi::kPi * rampsi::kPi / 6.0;
  auto slope = [&](double h) {
    return (rampsi::psi_prime_ramanujan(h, rampsi::plan(1e-13, h)).value - zeta2) / h;
  };
  // psi'(1+h) = zeta(2) - 2 zeta(3) h + 3 zeta(4) h^2 - ..., so the slope is a
  // power series in h; five step sizes down to h = 0.005 eliminate h through h^4.
  std::vector<double> table;
  for (double h = 0.08; table.size() < 5; h /= 2.0) table.push_back(slope(h));
  for (std::size_t level = 1; level < table.size(); ++level) {
    const double scale = std::ldexp(1.0, static_cast<int>(level));
    for (std::size_t i = table.size() - 1; i >= level; --i) {
      table[i] = (scale * table[i] - table[i - 1]) / (scale - 1.0);
    }
  }
  CHECK(std::abs(table.back() + 2.0 * oracle::zeta_direct(3.0)) <= 1e-6);
}

TEST_CASE("any-x gamma does not depend on x") {
  std::vector<rampsi::EulerGamma> values;
  for (double x : {0.5, 1.5 + 1e-3 * 2.0, 2.25, 6.75}) {
    values.push_back(rampsi::gamma_any_x(x, rampsi::plan(1e-13, x)));
  }
  double lo = values.front().value;
  double hi = lo;
  std::vector<double> errors;
  for (const auto& g : values) {
    lo = std::min(lo, g.value);
    hi = std::max(hi, g.value);
    errors.push_back(g.error_estimate);
  }
  std::sort(errors.rbegin(), errors.rend());
  CHECK(hi - lo <= errors[0] + errors[1]);
}

TEST_CASE("error estimates bound the change under refinement") {
  gen::SplitMix64 rng(20261018);
  for (int i = 0; i < 20; ++i) {
    double x = rng.uniform(0.1, 12.0);
    if (gen::near_positive_integer(x, 2e-3)) x += 0.01;
    const double tol = rng.log_uniform(1e-12, 1e-5);
    const EvalParams coarse = rampsi::plan(tol, x);
    EvalParams fine = coarse;
    fine.tol = std::max(tol / 2.0, rampsi::kMinTolerance);
    fine.k_terms = 2 * coarse.k_terms;
    fine.n_terms = 2 * coarse.n_terms;
    const SeriesValue a = rampsi::psi_ramanujan(x, coarse);
    const SeriesValue b = rampsi::psi_ramanujan(x, fine);
    CHECK_MESSAGE(std::abs(a.value - b.value) <= a.error_estimate, "x = " << x << ", tol = " << tol);

    const SeriesValue sa = rampsi::double_series_s(x, coarse);
    const SeriesValue sb = rampsi::double_series_s(x, fine);
    CHECK_MESSAGE(std::abs(sa.value - sb.value) <= sa.error_estimate, "S at x = " << x);
  }
  for (int k : {2, 4, 8}) {
    EvalParams p;
    p.k_terms = k;
    EvalParams q = p;
    q.k_terms = 2 * k;
    q.tol = p.tol / 2.0;
    const SeriesValue a = rampsi::csch2_sum(p);
    CHECK(std::abs(rampsi::csch2_sum(q).value - a.value) <= a.error_estimate);
    const SeriesValue z = rampsi::zeta_odd(2, rampsi::default_bernoulli_table(), p);
    CHECK(std::abs(rampsi::zeta_odd(2, rampsi::default_bernoulli_table(), q).value - z.value) <= z.error_estimate);
  }
}
