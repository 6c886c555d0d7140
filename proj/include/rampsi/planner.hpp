#pragma once

#include "rampsi/params.hpp"

#include <string_view>

namespace rampsi {

/// Series families whose tails the planner bounds.
///
/// exp_envelope: outer tail of the double series, sum_{k>=K} |S_k(x)|.
/// csch2:        sum_{k>=K} csch^2(pi k).
/// lambert:      sum_{k>=K} 2k / ((e^{2 pi k} - 1) |k^2 - x^2|).
/// log_csch2:    (pi/2) sum_{k>=K} |log|k^4 - x^4|| csch^2(pi k).
/// inner_sin / inner_cos: remainder of the summation-by-parts tail of the
///   inner n-series when N = first_omitted terms are summed directly,
///   weighted by 2 pi k^j e^{-2 pi k x} and summed over all k.
enum class TailFamily { exp_envelope, csch2, lambert, log_csch2, inner_sin, inner_cos };

std::string_view to_string(TailFamily family);

struct TailBound {
  TailFamily family;
  int first_omitted_index;
  double bound;
};

/// Number of summation-by-parts steps applied to each inner n-series tail.
inline constexpr int kAbelOrder = 10;

/// Rigorous upper bound for the tail of `family` starting at first_omitted.
/// Returns +inf when no finite bound applies (x on an integer for the
/// pole-carrying families). Throws DomainError if first_omitted < 1 or x <= 0.
TailBound tail_bound(TailFamily family, int first_omitted, double x);

/// As tail_bound for lambert/log_csch2, with the k = skip term left out; used
/// when that term is paired with a singular partner near x = skip.
double tail_bound_skipping(TailFamily family, int first_omitted, double x, long skip);

/// Remainder bound for one inner Lerch-type sum sum_{n>=N} z^n/(n + ia)
/// after kAbelOrder summation-by-parts steps, z = e^{2 pi i x}.
double inner_abel_remainder(int n_terms, double x);

/// Term counts for the series evaluators at target tolerance tol.
///
/// k_terms is the smallest count >= ceil(log(40/tol)/(2 pi)) for which each
/// of the csch2, lambert and log_csch2 tails is <= tol/4; n_terms is the
/// smallest count for which each inner family is <= tol/4. The outer tail of
/// the double series beyond k_terms is integrated in closed form by the
/// evaluator, so it does not drive k_terms. Throws ToleranceError when tol is
/// below 1e-15 or a family cannot be brought under tol/4 within the caps.
EvalParams plan(double tol, double x, double guard_delta = 1e-3);

}  // namespace rampsi
