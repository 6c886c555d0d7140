#pragma once

// Classical evaluators used as ground truth for the series in series.hpp.
// They share no code path with the series side beyond the Bernoulli table
// and k2_harmonic_sum, which the series use for their gamma-free H(k).

namespace rampsi::oracle {

struct OracleConfig {
  /// Absolute error target; at least kMinTolerance.
  double target_tolerance = 1e-15;
  /// The recurrence lifts the argument above this before the asymptotic
  /// expansion is applied.
  double shift_threshold = 16.0;
  /// Cap on the number of asymptotic or Euler-Maclaurin correction terms.
  int max_terms = 30;

  void validate() const;
};

/// psi(x + 1) for x > 0, via upward recurrence and the Stirling series
/// truncated at its smallest term. Throws ToleranceError if the target cannot
/// be met within max_terms.
double psi(double x, const OracleConfig& cfg = {});

/// psi(y) for any y > 0.
double digamma(double y, const OracleConfig& cfg = {});

/// Maclaurin series -gamma + sum_{n=1}^{n_terms} (-1)^{n+1} zeta(n+1) x^n of
/// psi(x + 1), for |x| < 1.
double psi_maclaurin(double x, int n_terms, const OracleConfig& cfg = {});

/// Upper bound on the truncation error of psi_maclaurin.
double psi_maclaurin_truncation_bound(double x, int n_terms);

struct ZetaValue {
  double value = 0.0;
  /// sum_{n <= terms} n^{-s}
  double partial_sum = 0.0;
  /// Integral bounds on sum_{n > terms} n^{-s}.
  double lower_tail = 0.0;
  double upper_tail = 0.0;
  int terms = 0;
};

/// zeta(s) for s > 1 by direct summation with an Euler-Maclaurin tail. The
/// value always lies inside partial_sum + [lower_tail, upper_tail].
ZetaValue zeta_direct_bracketed(double s, const OracleConfig& cfg = {});
double zeta_direct(double s, const OracleConfig& cfg = {});

/// sum_{n >= 1} k^2 / (n (n^2 + k^2)) for real k >= 0, by direct summation
/// with an Euler-Maclaurin tail. Equals gamma + Re psi(1 + ik).
double k2_harmonic_sum(double k);

/// Re psi(1 + ik) = k2_harmonic_sum(k) - gamma.
double re_psi_one_plus_ik(double k, const OracleConfig& cfg = {});

/// Im psi(1 + ix) = (pi/2) coth(pi x) - 1/(2x).
double im_psi_one_plus_ix(double x);

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  int panels = 0;
};

/// S(x) = int_0^inf log|2 sin(pi(x+u))| sum_k (2 pi k)^2 e^{-2 pi k (x+u)} du,
/// by composite Gauss-Legendre quadrature (quad_points nodes per panel) on
/// meshes graded geometrically toward each log singularity. Throws
/// DomainError if x is within 1e-6 of an integer and ToleranceError if the
/// estimated error exceeds 1e-10.
QuadratureResult s_integral(double x, int quad_points = 24);

/// int_0^inf x^{2m-1} / (e^{2 pi x} - 1) dx by composite Gauss-Legendre.
QuadratureResult lambert_integral(int m);

}  // namespace rampsi::oracle
