#include "rampsi/constants.hpp"
#include "rampsi/errors.hpp"
#include "rampsi/oracles.hpp"
#include "rampsi/planner.hpp"
#include "rampsi/series.hpp"
#include "series_detail.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace rampsi {

namespace {

void require_table(const BernoulliTable& table, int needed, const char* what) {
  if (table.max_index() < needed) {
    throw DomainError(std::string(what) + ": Bernoulli table must reach index " + std::to_string(needed));
  }
}

// sum_{k>K} 1/(e^{rate k} - 1) bounded geometrically.
double bose_tail(double rate, int big_k) {
  const double first = rate * (big_k + 1);
  return std::exp(-first) / (-std::expm1(-first) * -std::expm1(-rate));
}

// sum_{k>K} csch^2(gamma k) <= 4 e^{-2 gamma (K+1)} / ((1 - e^{-2 gamma (K+1)})^2 (1 - e^{-2 gamma})).
double csch2_tail(double gamma, int big_k) {
  const double lead = -std::expm1(-2.0 * gamma * (big_k + 1));
  return 4.0 * std::exp(-2.0 * gamma * (big_k + 1)) / (lead * lead * -std::expm1(-2.0 * gamma));
}

// Outer count for a sum decaying like e^{-rate k}: terms below 1e-20 relative
// to the first are dropped.
int count_for_rate(double rate, int floor_count) {
  const double needed = std::ceil(46.0 / rate);
  return static_cast<int>(std::clamp(needed, static_cast<double>(floor_count), 1e6));
}

}  // namespace

void ModularPair::validate() const {
  if (!(alpha > 0.0 && beta > 0.0) || !std::isfinite(alpha) || !std::isfinite(beta)) {
    throw DomainError("ModularPair: alpha and beta must be positive and finite");
  }
  const double pi2 = kPi * kPi;
  if (std::abs(alpha * beta - pi2) > 1e-14 * pi2) throw DomainError("ModularPair: alpha * beta must equal pi^2");
}

ModularPair ModularPair::from_alpha(double alpha) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) throw DomainError("ModularPair: alpha must be positive and finite");
  ModularPair pair{alpha, kPi * kPi / alpha};
  pair.validate();
  return pair;
}

SeriesValue csch2_sum(const EvalParams& params) {
  params.validate();
  SeriesValue out;
  for (int k = 1; k <= params.k_terms; ++k) out.value += detail::csch2_pi(k);
  out.error_estimate = tail_bound(TailFamily::csch2, params.k_terms + 1, 1.0).bound;
  out.k_used = params.k_terms;
  return out;
}

SeriesValue lambert_sum(int power, const EvalParams& params) {
  params.validate();
  SeriesValue out;
  const int big_k = params.k_terms;
  auto term = [power](int k) { return std::pow(static_cast<double>(k), power) * detail::bose_pi(k); };
  for (int k = 1; k <= big_k; ++k) out.value += term(k);

  // term(j+1)/term(j) <= (1 + 1/j)^{max(power,0)} e^{-2 pi}, decreasing in j.
  const int grow = std::max(power, 0);
  double tail = 0.0;
  for (int k = big_k + 1;; ++k) {
    tail += term(k);
    const double ratio = std::pow(1.0 + 1.0 / (k + 1.0), grow) * std::exp(-kTwoPi);
    if (ratio < 0.5) {
      tail += term(k + 1) / (1.0 - ratio);
      break;
    }
  }
  out.error_estimate = tail * (1.0 + 1e-9) + 4.0 * std::numeric_limits<double>::epsilon() * std::abs(out.value);
  out.k_used = big_k;
  return out;
}

BigRational zeta_odd_bernoulli_combination(int n, const BernoulliTable& table) {
  if (n < 0) throw DomainError("zeta_odd_bernoulli_combination: requires N >= 0");
  require_table(table, 2 * n + 2, "zeta_odd_bernoulli_combination");
  BigRational total;
  for (int j = 0; j <= n + 1; ++j) {
    BigRational term = bernoulli_over_factorial(table, 2 * j) * bernoulli_over_factorial(table, 2 * n + 2 - 2 * j);
    term *= BigRational(2 * j - 1);
    if (j % 2 == 0) term = -term;
    total += term;
  }
  return total;
}

SeriesValue zeta_odd(int n, const BernoulliTable& table, const EvalParams& params) {
  if (n < 1) throw DomainError("zeta_odd: requires N >= 1");
  require_table(table, 2 * n + 2, "zeta_odd");
  params.validate();
  const int big_k = params.k_terms;
  const double combination = zeta_odd_bernoulli_combination(n, table).to_double();

  double lambert = 0.0;
  double csch2 = 0.0;
  const bool even = n % 2 == 0;
  for (int k = 1; k <= big_k; ++k) {
    const double dk = k;
    lambert += std::pow(dk, -2 * n - 1) * detail::bose_pi(dk);
    if (even) csch2 += std::pow(dk, -2 * n) * detail::csch2_pi(dk);
  }
  const double dn = n;
  SeriesValue out;
  out.value = (std::pow(kTwoPi, 2 * n + 1) * combination - 4.0 * dn * lambert - (even ? 2.0 * kPi * csch2 : 0.0)) / (2.0 * dn);
  out.error_estimate = (4.0 * dn * bose_tail(kTwoPi, big_k) + (even ? 2.0 * kPi * csch2_tail(kPi, big_k) : 0.0)) / (2.0 * dn) +
                       4.0 * std::numeric_limits<double>::epsilon() * std::abs(out.value);
  out.k_used = big_k;
  return out;
}

double zeta_even(int n, const BernoulliTable& table) {
  if (n < 0) throw DomainError("zeta_even: requires N >= 0");
  require_table(table, 2 * n, "zeta_even");
  // (-1)^{N+1} 2^{2N-1} B_{2N}/(2N)! is rational; pi^{2N} is applied last.
  BigRational coefficient = bernoulli_over_factorial(table, 2 * n);
  if (n % 2 == 0) coefficient = -coefficient;
  if (n == 0) {
    coefficient /= BigRational(2);
  } else {
    coefficient *= BigRational(BigInt(1) << (2 * n - 1), BigInt(1));
  }
  return coefficient.to_double() * std::pow(kPi, 2 * n);
}

SeriesValue zeta_odd_general(int n, const ModularPair& pair, const BernoulliTable& table, const EvalParams& params) {
  if (n < 1) throw DomainError("zeta_odd_general: requires N >= 1");
  pair.validate();
  require_table(table, 2 * n + 2, "zeta_odd_general");
  params.validate();
  using ld = long double;
  const ld alpha = pair.alpha;
  const ld beta = pair.beta;
  const int big_n = n;

  ld rhs = 0.0L;
  ld rhs_magnitude = 0.0L;
  for (int j = 0; j <= big_n + 1; ++j) {
    BigRational c = bernoulli_over_factorial(table, 2 * j) * bernoulli_over_factorial(table, 2 * big_n + 2 - 2 * j);
    c *= BigRational(2 * j - 1);
    if (j % 2 == 0) c = -c;
    const ld term = c.to_long_double() * std::pow(alpha, static_cast<ld>(big_n + 1 - j)) * std::pow(beta, static_cast<ld>(j));
    rhs += term;
    rhs_magnitude += std::abs(term);
  }
  const ld scale = std::pow(2.0L, static_cast<ld>(2 * big_n + 1));
  rhs *= scale;
  rhs_magnitude *= scale;

  const int k_alpha = count_for_rate(2.0 * pair.alpha, params.k_terms);
  const int k_beta = count_for_rate(2.0 * pair.beta, params.k_terms);
  ld lambert = 0.0L;
  ld csch_alpha = 0.0L;
  for (int k = 1; k <= k_alpha; ++k) {
    const ld dk = k;
    lambert += std::pow(dk, static_cast<ld>(-2 * big_n - 1)) / std::expm1(2.0L * alpha * dk);
    const ld s = std::sinh(alpha * dk);
    csch_alpha += std::pow(dk, static_cast<ld>(-2 * big_n)) / (s * s);
  }
  ld csch_beta = 0.0L;
  for (int k = 1; k <= k_beta; ++k) {
    const ld dk = k;
    const ld s = std::sinh(beta * dk);
    csch_beta += std::pow(dk, static_cast<ld>(-2 * big_n)) / (s * s);
  }

  const ld alpha_weight = std::pow(alpha, static_cast<ld>(1 - big_n));
  const ld beta_weight = ((big_n - 1) % 2 == 0 ? 1.0L : -1.0L) * std::pow(beta, static_cast<ld>(1 - big_n));
  const ld factor = std::pow(alpha, static_cast<ld>(big_n)) / (2.0L * big_n);
  const ld value = (rhs - alpha_weight * csch_alpha + beta_weight * csch_beta) * factor - 2.0L * lambert;

  const double truncation = static_cast<double>(factor) * (static_cast<double>(alpha_weight) * csch2_tail(pair.alpha, k_alpha) +
                                                            static_cast<double>(std::abs(beta_weight)) * csch2_tail(pair.beta, k_beta)) +
                            2.0 * bose_tail(2.0 * pair.alpha, k_alpha);
  const double rounding = 8.0 * static_cast<double>(std::numeric_limits<ld>::epsilon()) *
                          static_cast<double>((rhs_magnitude + alpha_weight * csch_alpha + std::abs(beta_weight) * csch_beta) * factor);

  SeriesValue out;
  out.value = static_cast<double>(value);
  out.error_estimate = truncation + rounding + std::numeric_limits<double>::epsilon() * std::abs(out.value);
  out.k_used = std::max(k_alpha, k_beta);
  return out;
}

LambertIdentityCheck lambert_identity_residual(int m, const BernoulliTable& table, const EvalParams& params) {
  if (m <= 1 || m % 2 == 0) throw DomainError("lambert_identity_residual: requires odd m > 1");
  require_table(table, 2 * m, "lambert_identity_residual");
  const BigRational exact = table.at(2 * m) / BigRational(4 * m);
  const SeriesValue sum = lambert_sum(2 * m - 1, params);
  const oracle::QuadratureResult integral = oracle::lambert_integral(m);

  LambertIdentityCheck out;
  out.target = exact.to_double();
  out.residual = sum.value - out.target;
  out.error_estimate = sum.error_estimate + 4.0 * std::numeric_limits<double>::epsilon() * std::abs(out.target);
  out.integral = integral.value;
  out.integral_error = integral.error_estimate;
  if (std::abs(integral.value - out.target) > 1e-10) {
    throw ToleranceError("lambert_identity_residual: integral misses B_2m/(4m) by more than 1e-10");
  }
  return out;
}

double zeta_odd_limit_identity_residual(const BernoulliTable& table, const EvalParams& params) {
  const double r0 = zeta_odd_bernoulli_combination(0, table).to_double();
  return 1.0 + kTwoPi * csch2_sum(params).value - kTwoPi * r0;
}

double asymptotic_coefficient_residual(const EvalParams& params) {
  return 1.0 - kPi / 3.0 + kTwoPi * csch2_sum(params).value;
}

}  // namespace rampsi
