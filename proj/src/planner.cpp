#include "rampsi/planner.hpp"

#include "rampsi/constants.hpp"
#include "rampsi/errors.hpp"
#include "series_detail.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <sstream>
#include <string>

namespace rampsi {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
const double kExpMinusTwoPi = std::exp(-kTwoPi);

// Sum of term(k) for k >= first. Terms are added one at a time until k passes
// `regular_from` and the remainder can be bounded geometrically by
// term(k+1) / (1 - ratio_sup(k+1)), where ratio_sup(j) bounds term(i+1)/term(i)
// for every i >= j. The result is widened by kSumSlack to cover rounding in
// the terms and the running sum.
constexpr double kSumSlack = 1.0 + 1e-9;

double explicit_then_geometric(int first, int regular_from, const std::function<double(int)>& term,
                               const std::function<double(int)>& ratio_sup) {
  double total = 0.0;
  constexpr int kMaxExplicit = 100000;
  for (int k = first; k < first + kMaxExplicit; ++k) {
    const double b = term(k);
    if (!std::isfinite(b)) return kInf;
    total += b;
    if (k + 1 < regular_from) continue;
    const double r = ratio_sup(k + 1);
    if (!(r < 1.0)) continue;
    const double rest = term(k + 1) / (1.0 - r);
    if (rest <= 1e-3 * total || rest == 0.0) return (total + rest) * kSumSlack;
  }
  return kInf;
}

double lambert_term(int k, double x, long skip) {
  if (k == skip) return 0.0;
  const double gap = std::abs((k - x) * (k + x));
  if (gap == 0.0) return kInf;
  return 2.0 * k / (std::expm1(kTwoPi * k) * gap);
}

double log_csch2_term(int k, double x, long skip) {
  if (k == skip) return 0.0;
  const double dk = k;
  const double gap = std::abs(dk - x);
  if (gap == 0.0) return kInf;
  const double log_gap = std::log(gap) + std::log(dk + x) + std::log(dk * dk + x * x);
  return 0.5 * kPi * std::abs(log_gap) * detail::csch2_pi(dk);
}

double exp_envelope_term(int k, double x) {
  const double dk = k;
  return kTwoPi * dk * (3.1 + std::log(dk)) * std::exp(-kTwoPi * dk * x);
}

double family_tail(TailFamily family, int first, double x, long skip) {
  switch (family) {
    case TailFamily::csch2:
      return explicit_then_geometric(
          first, first, [](int k) { return detail::csch2_pi(k); },
          [](int) { return kExpMinusTwoPi; });
    case TailFamily::lambert: {
      const int regular = static_cast<int>(std::floor(x)) + 1;
      return explicit_then_geometric(
          first, regular, [x, skip](int k) { return lambert_term(k, x, skip); },
          [](int j) { return (1.0 + 1.0 / j) * kExpMinusTwoPi; });
    }
    case TailFamily::log_csch2: {
      const int regular = std::max(2, static_cast<int>(std::ceil(2.0 * x)) + 2);
      return explicit_then_geometric(
          first, regular, [x, skip](int k) { return log_csch2_term(k, x, skip); },
          [](int j) {
            return kExpMinusTwoPi * 4.0 * std::log(j + 1.0) / (4.0 * std::log(static_cast<double>(j)) + std::log(15.0 / 16.0));
          });
    }
    case TailFamily::exp_envelope:
      return explicit_then_geometric(
          first, first, [x](int k) { return exp_envelope_term(k, x); },
          [x](int j) {
            const double dj = j;
            return std::exp(-kTwoPi * x) * (1.0 + 1.0 / dj) * (3.1 + std::log(dj + 1.0)) / (3.1 + std::log(dj));
          });
    case TailFamily::inner_sin:
    case TailFamily::inner_cos:
      // sum_k 2 pi k e^{-2 pi k x} = (pi/2) csch^2(pi x), times the per-sum
      // remainder (the 1/k of the sine family cancels one power of k).
      return 0.5 * kPi * detail::csch2_pi(x) * inner_abel_remainder(first, x);
  }
  throw DomainError("tail_bound: unknown family");
}

void check_args(int first_omitted, double x) {
  if (first_omitted < 1) throw DomainError("tail_bound: first_omitted must be >= 1");
  if (!(x > 0.0)) throw DomainError("tail_bound: requires x > 0");
}

}  // namespace

std::string_view to_string(TailFamily family) {
  switch (family) {
    case TailFamily::exp_envelope: return "exp_envelope";
    case TailFamily::csch2: return "csch2";
    case TailFamily::lambert: return "lambert";
    case TailFamily::log_csch2: return "log_csch2";
    case TailFamily::inner_sin: return "inner_sin";
    case TailFamily::inner_cos: return "inner_cos";
  }
  return "unknown";
}

double inner_abel_remainder(int n_terms, double x) {
  const double one_minus_z = 2.0 * std::abs(detail::sin_pi(x));
  if (one_minus_z == 0.0) return kInf;
  const double w = 1.0 / one_minus_z;
  // |w|^p ((p-1)!/N^p + p!/N^{p+1}), assembled in logs to avoid overflow.
  const double n = n_terms;
  const double p = kAbelOrder;
  const double log_first = p * std::log(w) + std::lgamma(p) - p * std::log(n);
  return std::exp(log_first) * (1.0 + p / n);
}

TailBound tail_bound(TailFamily family, int first_omitted, double x) {
  check_args(first_omitted, x);
  return {family, first_omitted, family_tail(family, first_omitted, x, -1)};
}

double tail_bound_skipping(TailFamily family, int first_omitted, double x, long skip) {
  check_args(first_omitted, x);
  return family_tail(family, first_omitted, x, skip);
}

EvalParams plan(double tol, double x, double guard_delta) {
  if (!(tol >= kMinTolerance)) {
    std::ostringstream msg;
    msg << "plan: tolerance " << tol << " is below the double-precision floor 1e-15";
    throw ToleranceError(msg.str());
  }
  if (!(x > 0.0)) throw DomainError("plan: requires x > 0");

  EvalParams params;
  params.tol = tol;
  params.guard_delta = guard_delta;
  params.validate();

  const double share = tol / 4.0;
  const long nearest = std::lround(x);
  const bool in_band = nearest >= 1 && std::abs(x - nearest) < guard_delta;
  const long skip = in_band ? nearest : -1;

  constexpr int kMaxK = 60;
  int k = static_cast<int>(std::ceil(std::log(40.0 / tol) / kTwoPi));
  k = std::max(k, 1);
  while (family_tail(TailFamily::csch2, k + 1, x, skip) > share ||
         family_tail(TailFamily::lambert, k + 1, x, skip) > share ||
         family_tail(TailFamily::log_csch2, k + 1, x, skip) > share) {
    if (++k > kMaxK) throw ToleranceError("plan: k-series tails cannot reach the requested tolerance");
  }
  params.k_terms = k;

  // Inside a band the double series needs no inner sums, but parameters
  // planned at an integer are often reused just outside it; size n_terms for
  // the band edge.
  const double x_inner = in_band ? static_cast<double>(nearest) + guard_delta : x;
  constexpr int kMaxN = 1 << 24;
  int n = 32;
  while (0.5 * kPi * detail::csch2_pi(x_inner) * inner_abel_remainder(n, x_inner) > share) {
    if (n >= kMaxN) throw ToleranceError("plan: inner series cannot reach the requested tolerance");
    n = std::min(kMaxN, n + std::max(8, n / 4));
  }
  params.n_terms = n;
  return params;
}

}  // namespace rampsi
