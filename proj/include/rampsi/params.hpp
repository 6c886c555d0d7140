#pragma once

namespace rampsi {

/// Truncation controls shared by every series evaluator.
struct EvalParams {
  /// Target absolute error.
  double tol = 1e-13;
  /// Cap on the outer index k of the e^{-2 pi k} families and of the double
  /// series.
  int k_terms = 10;
  /// Terms summed directly in each inner n-series of the double series before
  /// the summation-by-parts tail takes over.
  int n_terms = 4096;
  /// Half-width of the band around each positive integer inside which the
  /// singular pairings are evaluated in their regularized form.
  double guard_delta = 1e-3;

  /// Throws DomainError when a field is outside its documented range.
  void validate() const;
};

/// A series evaluation together with an a-posteriori bound on the truncation
/// error and the term counts that produced it.
struct SeriesValue {
  double value = 0.0;
  double error_estimate = 0.0;
  int k_used = 0;
  int n_used = 0;
};

/// Smallest tolerance accepted in double precision.
inline constexpr double kMinTolerance = 1e-15;

}  // namespace rampsi
