#pragma once

#include "rampsi/bernoulli.hpp"
#include "rampsi/big_rational.hpp"
#include "rampsi/params.hpp"

namespace rampsi {

/// Positive reals with alpha * beta = pi^2.
struct ModularPair {
  double alpha = 0.0;
  double beta = 0.0;

  /// Throws DomainError unless both are positive and |alpha beta - pi^2| <= 1e-14 pi^2.
  void validate() const;
  static ModularPair from_alpha(double alpha);
};

enum class GammaSource { integer_limit, any_x };

struct EulerGamma {
  double value = 0.0;
  GammaSource source = GammaSource::integer_limit;
  double error_estimate = 0.0;
  int k_used = 0;
  int n_used = 0;
  /// The series side before the final subtraction: H_m - gamma for the
  /// integer form, Re psi(1 + ix) for the any-x form.
  double series_value = 0.0;
};

/// sum_{k<=k_terms} csch^2(pi k); the full sum is 1/6 - 1/(2 pi).
SeriesValue csch2_sum(const EvalParams& params);

/// sum_{k<=k_terms} k^power / (e^{2 pi k} - 1) for any integer power.
SeriesValue lambert_sum(int power, const EvalParams& params);

/// S(x) = 2 pi sum_k e^{-2 pi k x} (k^2 sum_n sin(2 pi n x)/(n^2+k^2)
///                                  - k^3 sum_n cos(2 pi n x)/(n (n^2+k^2))).
///
/// Outer sum to k_terms, plus an integrated correction for k > k_terms when
/// the envelope tail exceeds tol/4. Each inner sum is summed directly to
/// n_terms and finished with kAbelOrder summation-by-parts steps. At an
/// integer, and inside the guard band, the inner sums reduce to harmonic-type
/// sums and S is continued from the integer by a local expansion.
SeriesValue double_series_s(double x, const EvalParams& params);

/// psi(x + 1) from the rapidly convergent hyperbolic series, with the
/// singular pairings regularized inside the guard band.
SeriesValue psi_ramanujan(double x, const EvalParams& params);

/// Euler's constant from the integer limit point m of the psi series.
EulerGamma gamma_at_integer(long m, const EvalParams& params);

/// Euler's constant from the any-x form. Throws GuardBandError inside the band.
EulerGamma gamma_any_x(double x, const EvalParams& params);

/// psi'(x + 1). Throws GuardBandError inside the band.
SeriesValue psi_prime_ramanujan(double x, const EvalParams& params);

/// For N >= 0: sum_{j=0}^{N+1} (-1)^{j+1} (2j-1) B_{2j}/(2j)! B_{2N+2-2j}/(2N+2-2j)!, exactly.
BigRational zeta_odd_bernoulli_combination(int n, const BernoulliTable& table);

/// zeta(2N+1) for N >= 1.
SeriesValue zeta_odd(int n, const BernoulliTable& table, const EvalParams& params);

/// zeta(2N) = (-1)^{N+1} 2^{2N-1} pi^{2N} B_{2N}/(2N)! for N >= 0.
double zeta_even(int n, const BernoulliTable& table);

/// zeta(2N+1) from the two-parameter form with alpha beta = pi^2.
SeriesValue zeta_odd_general(int n, const ModularPair& pair, const BernoulliTable& table,
                             const EvalParams& params);

struct LambertIdentityCheck {
  /// lambert_sum(2m-1) - B_{2m}/(4m).
  double residual = 0.0;
  double error_estimate = 0.0;
  double target = 0.0;
  double integral = 0.0;
  double integral_error = 0.0;
};

/// Compares sum_k k^{2m-1}/(e^{2 pi k}-1) and int_0^inf x^{2m-1}/(e^{2 pi x}-1) dx
/// with B_{2m}/(4m), m odd > 1. Throws ToleranceError if the integral misses
/// the target by more than 1e-10.
LambertIdentityCheck lambert_identity_residual(int m, const BernoulliTable& table, const EvalParams& params);

/// Re psi(1 + ix). Throws GuardBandError inside the band.
SeriesValue re_psi_complex_ramanujan(double x, const EvalParams& params);

/// psi(x + 1) - (pi/3) log x + (pi/2) sum_k log|x^4 - k^4| csch^2(pi k) with
/// psi from the classical oracle, for x = N + 1/2.
double asymptotic_residual(double x, const EvalParams& params);

/// Partial fraction form of psi(x + 1) + gamma, with the same k_terms:
/// 1/(2x) - 1/(2 pi x^2) + pi cot(pi x)/(e^{2 pi x}-1) + sum_k x^2/(k(k^2+x^2))
/// + sum_k 4 k x^2 / ((e^{2 pi k}-1)(k^4-x^4)).
SeriesValue psi_plus_gamma_partial_fractions(double x, const EvalParams& params);

/// The odd-zeta identity read at N = 0 with 2N zeta(2N+1) taken as 1:
/// 1 + 2 pi sum_k csch^2(pi k) - 2 pi R_0, where R_0 = 1/6 is the exact
/// Bernoulli combination.
double zeta_odd_limit_identity_residual(const BernoulliTable& table, const EvalParams& params);

/// 1 - pi/3 + 2 pi sum csch^2(pi k).
double asymptotic_coefficient_residual(const EvalParams& params);

/// Two closed forms of the same limit of the cot pairing at x = m:
/// -pi / (2 sinh^2(pi m)) and -2 pi e^{2 pi m} / (e^{2 pi m} - 1)^2.
struct LimitForms {
  double csch_form = 0.0;
  double exp_form = 0.0;
};
LimitForms singular_pair_limit_forms(long m);

}  // namespace rampsi
