#include "rampsi/constants.hpp"
#include "rampsi/errors.hpp"
#include "rampsi/oracles.hpp"
#include "rampsi/planner.hpp"
#include "rampsi/series.hpp"
#include "series_detail.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace rampsi {

namespace {

struct Band {
  long m = -1;     // nearest positive integer, or -1 outside every band
  double t = 0.0;  // x - m
};

Band locate(double x, double guard_delta) {
  const long nearest = std::lround(x);
  const double t = x - static_cast<double>(nearest);
  if (nearest >= 1 && std::abs(t) < guard_delta) return {nearest, t};
  return {};
}

void require_positive(double x, const char* what) {
  if (!(x > 0.0) || !std::isfinite(x)) throw DomainError(std::string(what) + ": requires finite x > 0");
}

void reject_band(double x, const EvalParams& params, const char* what, const char* alternative) {
  const Band band = locate(x, params.guard_delta);
  if (band.m < 0) return;
  throw GuardBandError(std::string(what) + ": x = " + std::to_string(x) + " lies within " +
                           std::to_string(params.guard_delta) + " of " + std::to_string(band.m) + "; use " +
                           alternative + " " + std::to_string(band.m),
                       band.m);
}

// pi cot(pi t) - 1/t
double cot_remainder(double t) {
  if (t == 0.0) return 0.0;
  if (std::abs(t) < 1e-2) {
    const double u = kPi * t;
    const double u2 = u * u;
    return -kPi * u * (1.0 / 3.0 + u2 * (1.0 / 45.0 + u2 * (2.0 / 945.0 + u2 / 4725.0)));
  }
  return kPi * detail::cos_pi(t) / detail::sin_pi(t) - 1.0 / t;
}

// log(sin(pi t) / (pi t))
double log_sinc(double t) {
  const double u = kPi * t;
  if (std::abs(t) < 1e-2) {
    const double u2 = u * u;
    return -u2 * (1.0 / 6.0 + u2 * (1.0 / 180.0 + u2 / 2835.0));
  }
  return std::log(detail::sin_pi(std::abs(t)) / std::abs(u));
}

// expm1(2 pi t) / t, continuous at 0
double expm1_ratio(double t) { return t == 0.0 ? kTwoPi : std::expm1(kTwoPi * t) / t; }

// pi cot(pi x)/(e^{2 pi x}-1) + 2m/((e^{2 pi m}-1)(m^2-x^2)) with x = m + t,
// rearranged so the 1/t poles cancel analytically.
double cot_pair(long m, double t) {
  const double dm = static_cast<double>(m);
  const double x = dm + t;
  const double qx = detail::bose_pi(x);
  const double qm = detail::bose_pi(dm);
  const double dq = -expm1_ratio(t) * qx / (-std::expm1(-kTwoPi * dm));
  return dq + cot_remainder(t) * qx + qm / (2.0 * dm + t);
}

// pi log|2 sin(pi x)|/(2 sinh^2(pi x)) - (pi/2) log|m^4 - x^4| / sinh^2(pi m),
// with the two log|t| singularities combined.
double log_pair(long m, double t) {
  const double dm = static_cast<double>(m);
  const double x = dm + t;
  const double cx = detail::csch2_pi(x);
  const double cm = detail::csch2_pi(dm);
  const double singular = (t == 0.0) ? 0.0 : std::log(std::abs(t)) * (cx - cm);
  return 0.5 * kPi *
         (singular + (std::log(kTwoPi) + log_sinc(t)) * cx - (std::log(2.0 * dm + t) + std::log(dm * dm + x * x)) * cm);
}

// Terms of the k-series shared by the psi and Re psi(1+ix) evaluators.
struct KSums {
  double lambert = 0.0;   // sum 2k / ((e^{2 pi k}-1)(k^2 - x^2)), k != skip
  double log_sum = 0.0;   // -(pi/2) sum log|k^4 - x^4| csch^2(pi k), k != skip
  double error = 0.0;
};

KSums psi_k_sums(double x, int big_k, long skip) {
  KSums sums;
  for (int k = 1; k <= big_k; ++k) {
    if (k == skip) continue;
    const double dk = k;
    sums.lambert += 2.0 * dk * detail::bose_pi(dk) / ((dk - x) * (dk + x));
    sums.log_sum -= 0.5 * kPi * detail::log_abs_quartic_gap(dk, x) * detail::csch2_pi(dk);
  }
  sums.error = tail_bound_skipping(TailFamily::lambert, big_k + 1, x, skip) +
               tail_bound_skipping(TailFamily::log_csch2, big_k + 1, x, skip);
  return sums;
}

// Floating-point error of a short sum whose terms total `magnitude` in absolute value.
double rounding(double magnitude) { return 8.0 * std::numeric_limits<double>::epsilon() * magnitude; }

double geometric_tail(double first_term, double ratio) {
  if (!(ratio < 1.0)) return std::numeric_limits<double>::infinity();
  return first_term / (1.0 - ratio);
}

}  // namespace

SeriesValue psi_ramanujan(double x, const EvalParams& params) {
  require_positive(x, "psi_ramanujan");
  params.validate();
  const int big_k = params.k_terms;
  const Band band = locate(x, params.guard_delta);

  const double head[] = {kPi / 3.0 * std::log(x), 0.5 / x, -1.0 / (4.0 * kPi * x * x)};
  double pairs[2];
  if (band.m > 0) {
    pairs[0] = cot_pair(band.m, band.t);
    pairs[1] = log_pair(band.m, band.t);
  } else {
    pairs[0] = kPi * detail::cos_pi(x) / detail::sin_pi(x) * detail::bose_pi(x);
    pairs[1] = 0.5 * kPi * std::log(2.0 * std::abs(detail::sin_pi(x))) * detail::csch2_pi(x);
  }
  const KSums sums = psi_k_sums(x, big_k, band.m);
  const SeriesValue s = double_series_s(x, params);

  double value = 0.0;
  double magnitude = 0.0;
  for (double term : {head[0], head[1], head[2], pairs[0], pairs[1], sums.lambert, sums.log_sum, -s.value}) {
    value += term;
    magnitude += std::abs(term);
  }

  SeriesValue out;
  out.value = value;
  out.error_estimate = sums.error + s.error_estimate + rounding(magnitude);
  out.k_used = big_k;
  out.n_used = s.n_used;
  return out;
}

EulerGamma gamma_at_integer(long m, const EvalParams& params) {
  if (m < 1) throw DomainError("gamma_at_integer: requires m >= 1");
  params.validate();
  const int big_k = params.k_terms;
  const double dm = static_cast<double>(m);

  double rhs = kPi / 3.0 * std::log(dm) + 0.5 / dm - 1.0 / (4.0 * kPi * dm * dm);
  for (int k = 1; k <= big_k; ++k) {
    if (k == m) continue;
    const double dk = k;
    rhs += 2.0 * dk * detail::bose_pi(dk) / ((dk - dm) * (dk + dm));
  }
  rhs += 0.5 * kPi * (std::log(kPi) - std::log(2.0 * dm * dm * dm) - 1.0) * detail::csch2_pi(dm);
  for (int k = 1; k <= big_k; ++k) {
    if (k == m) continue;
    rhs -= 0.5 * kPi * detail::log_abs_quartic_gap(k, dm) * detail::csch2_pi(k);
  }
  rhs += 0.5 / dm * detail::bose_pi(dm);
  for (int k = 1; k <= big_k; ++k) {
    rhs += kTwoPi * k * std::exp(-kTwoPi * k * dm) * oracle::k2_harmonic_sum(k);
  }

  double harmonic = 0.0;
  for (long j = 1; j <= m; ++j) harmonic += 1.0 / static_cast<double>(j);

  EulerGamma out;
  out.source = GammaSource::integer_limit;
  out.series_value = rhs;
  out.value = harmonic - rhs;
  out.error_estimate = tail_bound_skipping(TailFamily::lambert, big_k + 1, dm, m) +
                       tail_bound_skipping(TailFamily::log_csch2, big_k + 1, dm, m) +
                       tail_bound(TailFamily::exp_envelope, big_k + 1, dm).bound +
                       rounding(std::abs(rhs) + harmonic + std::abs(kPi / 3.0 * std::log(dm)) + 1.0);
  out.k_used = big_k;
  out.n_used = 0;
  return out;
}

SeriesValue re_psi_complex_ramanujan(double x, const EvalParams& params) {
  require_positive(x, "re_psi_complex_ramanujan");
  params.validate();
  reject_band(x, params, "re_psi_complex_ramanujan", "gamma --m");
  const int big_k = params.k_terms;

  double value = kPi / 3.0 * std::log(x) + 1.0 / (4.0 * kPi * x * x);
  value += 0.5 * kPi * std::log(2.0 * std::abs(detail::sin_pi(x))) * detail::csch2_pi(x);
  double error = 0.0;
  for (int k = 1; k <= big_k; ++k) {
    const double dk = k;
    value += 2.0 * dk * detail::bose_pi(dk) / (dk * dk + x * x);
    value -= 0.5 * kPi * detail::log_abs_quartic_gap(dk, x) * detail::csch2_pi(dk);
  }
  // 2k/((k^2+x^2)(e^{2 pi k}-1)) <= 2/(k (e^{2 pi k}-1)), the x -> 0 lambert family.
  error += tail_bound(TailFamily::lambert, big_k + 1, 1e-300).bound;
  error += tail_bound(TailFamily::log_csch2, big_k + 1, x).bound;

  const SeriesValue s = double_series_s(x, params);
  SeriesValue out;
  out.value = value - s.value;
  out.error_estimate = error + s.error_estimate +
                       rounding(std::abs(kPi / 3.0 * std::log(x)) + 1.0 / (4.0 * kPi * x * x) + std::abs(value) + std::abs(s.value));
  out.k_used = big_k;
  out.n_used = s.n_used;
  return out;
}

EulerGamma gamma_any_x(double x, const EvalParams& params) {
  require_positive(x, "gamma_any_x");
  params.validate();
  reject_band(x, params, "gamma_any_x", "gamma --m");
  const SeriesValue re_psi = re_psi_complex_ramanujan(x, params);
  EulerGamma out;
  out.source = GammaSource::any_x;
  out.series_value = re_psi.value;
  out.value = oracle::k2_harmonic_sum(x) - re_psi.value;
  out.error_estimate = re_psi.error_estimate + 1e-15 * (1.0 + std::log1p(x));
  out.k_used = re_psi.k_used;
  out.n_used = re_psi.n_used;
  return out;
}

SeriesValue psi_prime_ramanujan(double x, const EvalParams& params) {
  require_positive(x, "psi_prime_ramanujan");
  params.validate();
  reject_band(x, params, "psi_prime_ramanujan", "a point outside the band around");
  const int big_k = params.k_terms;

  const double s = detail::sin_pi(x);
  double value = kPi / (3.0 * x) - 0.5 / (x * x) + 1.0 / (2.0 * kPi * x * x * x);
  value -= kPi * kPi / (s * s) * detail::bose_pi(x);
  for (int k = 1; k <= big_k; ++k) {
    const double dk = k;
    const double gap = (dk - x) * (dk + x);
    value += 4.0 * dk * x * detail::bose_pi(dk) / (gap * gap);
    value += kTwoPi * x * x * x * detail::csch2_pi(dk) / (gap * (dk * dk + x * x));
  }
  double error = 0.0;
  {
    const int first = big_k + 1;
    const int regular = std::max(first, static_cast<int>(std::ceil(2.0 * x)) + 2);
    for (int k = first; k < regular; ++k) {
      const double dk = k;
      const double gap = std::abs((dk - x) * (dk + x));
      error += 4.0 * dk * x * detail::bose_pi(dk) / (gap * gap) +
               kTwoPi * x * x * x * detail::csch2_pi(dk) / (gap * (dk * dk + x * x));
    }
    const double dk = regular;
    // From k >= 2x + 2 on, k^2 - x^2 >= 3k^2/4 and k^4 - x^4 >= 15k^4/16, and
    // both bounds shrink by at least e^{-2 pi} per step.
    const double first_term = (64.0 / 9.0) * x / (dk * dk * dk) * detail::bose_pi(dk) +
                              kTwoPi * x * x * x * (16.0 / 15.0) * detail::csch2_pi(dk) / (dk * dk * dk * dk);
    error += geometric_tail(first_term, (1.0 + 1.0 / dk) * std::exp(-kTwoPi));
  }

  SeriesValue out;
  out.value = value;
  out.error_estimate = error + rounding(kPi / (3.0 * x) + 0.5 / (x * x) + 1.0 / (kPi * x * x * x) + std::abs(value));
  out.k_used = big_k;
  out.n_used = 0;
  return out;
}

SeriesValue psi_plus_gamma_partial_fractions(double x, const EvalParams& params) {
  require_positive(x, "psi_plus_gamma_partial_fractions");
  params.validate();
  reject_band(x, params, "psi_plus_gamma_partial_fractions", "gamma --m");
  const int big_k = params.k_terms;

  double value = 0.5 / x - 1.0 / (2.0 * kPi * x * x);
  value += kPi * detail::cos_pi(x) / detail::sin_pi(x) * detail::bose_pi(x);
  value += oracle::k2_harmonic_sum(x);
  const double x2 = x * x;
  for (int k = 1; k <= big_k; ++k) {
    const double dk = k;
    value += 4.0 * dk * x2 * detail::bose_pi(dk) / ((dk - x) * (dk + x) * (dk * dk + x2));
  }
  // 4k x^2/((k^4-x^4)(e^{2 pi k}-1)) = (2x^2/(k^2+x^2)) * 2k/((k^2-x^2)(e^{2 pi k}-1)),
  // and the first factor is below 2.
  SeriesValue out;
  out.value = value;
  out.error_estimate = 2.0 * tail_bound(TailFamily::lambert, big_k + 1, x).bound +
                       rounding(0.5 / x + 1.0 / (kPi * x * x) + std::abs(value));
  out.k_used = big_k;
  return out;
}

double asymptotic_residual(double x, const EvalParams& params) {
  params.validate();
  const double n = x - 0.5;
  if (!(n >= 1.0) || n != std::floor(n)) throw DomainError("asymptotic_residual: requires x = N + 1/2 with N >= 1");
  double value = oracle::psi(x) - kPi / 3.0 * std::log(x);
  for (int k = 1; k <= params.k_terms; ++k) {
    value += 0.5 * kPi * detail::log_abs_quartic_gap(k, x) * detail::csch2_pi(k);
  }
  return value;
}

LimitForms singular_pair_limit_forms(long m) {
  if (m < 1) throw DomainError("singular_pair_limit_forms: requires m >= 1");
  const double dm = static_cast<double>(m);
  LimitForms forms;
  forms.csch_form = -0.5 * kPi * detail::csch2_pi(dm);
  // e^{2 pi m}/(e^{2 pi m}-1)^2 = e^{-2 pi m}/(1-e^{-2 pi m})^2
  const double d = -std::expm1(-kTwoPi * dm);
  forms.exp_form = -kTwoPi * std::exp(-kTwoPi * dm) / (d * d);
  return forms;
}

}  // namespace rampsi
