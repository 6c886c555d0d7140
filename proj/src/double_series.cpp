#include "rampsi/constants.hpp"
#include "rampsi/errors.hpp"
#include "rampsi/oracles.hpp"
#include "rampsi/planner.hpp"
#include "rampsi/series.hpp"
#include "series_detail.hpp"

#include <boost/math/quadrature/tanh_sinh.hpp>

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <vector>

namespace rampsi {

namespace {

using cplx = std::complex<double>;

// e^{2 pi i n x} from the exact fractional part of n x.
cplx unit_phase(double n, double x) {
  const double prod = n * x;
  const double low = std::fma(n, x, -prod);
  double frac = (prod - std::floor(prod)) + low;
  frac -= std::floor(frac);
  return {detail::cos_pi(2.0 * frac), detail::sin_pi(2.0 * frac)};
}

// sum_{n >= N} z^n / (n + a) after kAbelOrder summation-by-parts steps,
// using the exact backward differences of 1/(n + a).
cplx lerch_tail(cplx w, const std::vector<cplx>& z_pows, int big_n, cplx a) {
  cplx total = 0.0;
  cplx w_pow = w;
  cplx denom = 1.0;
  double factorial = 1.0;
  for (int j = 0; j < kAbelOrder; ++j) {
    denom *= static_cast<double>(big_n + j) + a;
    if (j > 0) factorial *= j;
    const double sign = (j % 2 == 0) ? 1.0 : -1.0;
    total += w_pow * (sign * factorial) * z_pows[static_cast<std::size_t>(j)] / denom;
    w_pow *= w;
  }
  return total;
}

// (2 pi)^2 sum_{k > K} k^2 e^{-2 pi k v}.
double envelope_beyond(int big_k, double v) {
  const double q = std::exp(-kTwoPi * v);
  const double one_minus_q = -std::expm1(-kTwoPi * v);
  const double kk = big_k;
  const double poly = (kk + 1.0) * (kk + 1.0) - (2.0 * kk * kk + 2.0 * kk - 1.0) * q + kk * kk * q * q;
  return kTwoPi * kTwoPi * std::pow(q, kk + 1.0) * poly / (one_minus_q * one_minus_q * one_minus_q);
}

// int_x^inf log|2 sin(pi v)| (2 pi)^2 sum_{k>K} k^2 e^{-2 pi k v} dv, one unit
// interval at a time in the local coordinate s = v - j.
SeriesValue outer_tail_integral(double x, int big_k) {
  boost::math::quadrature::tanh_sinh<double> integrator;
  SeriesValue out;
  double j = std::floor(x);
  double s0 = x - j;
  for (int interval = 0; interval < 200; ++interval, j += 1.0, s0 = 0.0) {
    if (envelope_beyond(big_k, j + s0) / (-std::expm1(-kTwoPi)) < 1e-20) {
      out.error_estimate += envelope_beyond(big_k, j + s0) / (-std::expm1(-kTwoPi));
      break;
    }
    if (s0 >= 1.0) continue;
    // Integrate in the distance d to the singular endpoint so nodes near the
    // log singularity are represented exactly.
    const double mid = 0.5 * (s0 + 1.0);
    auto right_half = [j, big_k](double d) {
      return std::log(2.0 * detail::sin_pi(d)) * envelope_beyond(big_k, j + 1.0 - d);
    };
    auto left_half = [j, big_k](double s) {
      return std::log(2.0 * detail::sin_pi(s)) * envelope_beyond(big_k, j + s);
    };
    double err = 0.0;
    double l1 = 0.0;
    out.value += integrator.integrate(right_half, 0.0, 1.0 - mid, 1e-15, &err, &l1);
    out.error_estimate += err + 4.0 * std::numeric_limits<double>::epsilon() * l1;
    out.value += integrator.integrate(left_half, s0, mid, 1e-15, &err, &l1);
    out.error_estimate += err + 4.0 * std::numeric_limits<double>::epsilon() * l1;
  }
  return out;
}

// S at a positive integer: the sine sums vanish and the cosine sums are
// harmonic-type sums H(k) = sum_n k^2/(n(n^2+k^2)).
SeriesValue s_at_integer(long m, int big_k) {
  SeriesValue out;
  const double dm = static_cast<double>(m);
  for (int k = 1; k <= big_k; ++k) {
    out.value -= kTwoPi * k * std::exp(-kTwoPi * k * dm) * oracle::k2_harmonic_sum(k);
  }
  out.error_estimate = tail_bound(TailFamily::exp_envelope, big_k + 1, dm).bound;
  out.k_used = big_k;
  return out;
}

// int_0^t log|2 sin(pi tau)| E(m + tau) d tau, E(v) = sum_k (2 pi k)^2 e^{-2 pi k v},
// from the Taylor series of E at m and the even power series of
// log(sin(pi tau)/(pi tau)) = -sum_{n>=1} zeta(2n) tau^{2n} / n.
SeriesValue band_integral(long m, double t) {
  SeriesValue out;
  if (t == 0.0) return out;
  const double dm = static_cast<double>(m);
  const double abs_t = std::abs(t);
  const double log_abs_t = std::log(abs_t);

  constexpr int kLogTerms = 30;
  std::vector<double> log_sinc(kLogTerms + 1, 0.0);
  const BernoulliTable& table = default_bernoulli_table();
  for (int n = 1; n <= kLogTerms; ++n) {
    const double zeta_2n = std::abs(table.as_double(2 * n)) * std::pow(kTwoPi, 2 * n) / (2.0 * std::tgamma(2.0 * n + 1.0));
    log_sinc[static_cast<std::size_t>(n)] = -zeta_2n / n;
  }

  constexpr int kMaxOrder = 120;
  int small_in_a_row = 0;
  for (int j = 0; j <= kMaxOrder; ++j) {
    // e_j = sum_k (2 pi k)^2 (-2 pi k)^j e^{-2 pi k m} / j!
    double e_j = 0.0;
    for (int k = 1; k <= 400; ++k) {
      const double lk = std::log(kTwoPi * k);
      const double log_mag = (j + 2) * lk - std::lgamma(j + 1.0) - kTwoPi * k * dm;
      const double term = std::exp(log_mag);
      e_j += term;
      if (log_mag < -700.0 && k > (j + 2) / (kTwoPi * dm) + 1) break;
    }
    if (j % 2 == 1) e_j = -e_j;

    const double p = j + 1.0;
    const double t_pow = std::pow(t, p);  // t^{j+1}, signed
    double piece = t_pow / p * (log_abs_t - 1.0 / p + std::log(kTwoPi));
    double t2 = 1.0;
    for (int n = 1; n <= kLogTerms; ++n) {
      t2 *= t * t;
      const double contribution = log_sinc[static_cast<std::size_t>(n)] * t_pow * t2 / (p + 2.0 * n);
      piece += contribution;
      if (std::abs(contribution) < 1e-30) break;
    }
    const double term = e_j * piece;
    out.value += term;
    const double scale = 1e-19 * std::max(1.0, std::abs(out.value));
    if (std::abs(term) < scale) {
      if (++small_in_a_row >= 3) {
        out.error_estimate = 2.0 * std::abs(term);
        break;
      }
    } else {
      small_in_a_row = 0;
    }
    if (j == kMaxOrder) out.error_estimate = std::abs(term) * 10.0;
  }
  out.error_estimate += 1e-15 * std::abs(out.value);
  return out;
}

}  // namespace

SeriesValue double_series_s(double x, const EvalParams& params) {
  if (!(x > 0.0) || !std::isfinite(x)) throw DomainError("double_series_s: requires finite x > 0");
  params.validate();
  const int big_k = params.k_terms;

  const long nearest = std::lround(x);
  const double offset = x - static_cast<double>(nearest);
  if (nearest >= 1 && std::abs(offset) < params.guard_delta) {
    SeriesValue at_m = s_at_integer(nearest, big_k);
    const SeriesValue local = band_integral(nearest, offset);
    at_m.value -= local.value;
    at_m.error_estimate += local.error_estimate;
    return at_m;
  }

  const int big_n = params.n_terms;
  std::vector<cplx> phases(static_cast<std::size_t>(big_n));
  for (int n = 1; n < big_n; ++n) phases[static_cast<std::size_t>(n)] = unit_phase(n, x);
  std::vector<cplx> tail_phases(kAbelOrder);
  for (int j = 0; j < kAbelOrder; ++j) tail_phases[static_cast<std::size_t>(j)] = unit_phase(static_cast<double>(big_n) + j, x);

  const cplx z = unit_phase(1.0, x);
  const cplx w = 1.0 / (1.0 - z);
  const double log_two_sin = std::log(2.0 * std::abs(detail::sin_pi(x)));
  const double rho = inner_abel_remainder(big_n, x);

  SeriesValue out;
  out.k_used = big_k;
  out.n_used = big_n;
  double magnitude = 0.0;
  for (int k = 1; k <= big_k; ++k) {
    const double dk = k;
    const double k2 = dk * dk;
    double sine_sum = 0.0;
    double cos_sum = 0.0;
    for (int n = 1; n < big_n; ++n) {
      const double dn = n;
      const double inv = 1.0 / (dn * dn + k2);
      sine_sum += phases[static_cast<std::size_t>(n)].imag() * inv;
      cos_sum += dn * phases[static_cast<std::size_t>(n)].real() * inv;
    }
    const cplx minus = lerch_tail(w, tail_phases, big_n, cplx(0.0, -dk));
    const cplx plus = lerch_tail(w, tail_phases, big_n, cplx(0.0, dk));
    sine_sum += -(minus - plus).real() / (2.0 * dk);
    cos_sum += 0.5 * (minus + plus).real();

    const double weight = kTwoPi * std::exp(-kTwoPi * dk * x);
    out.value += weight * (k2 * sine_sum + dk * log_two_sin + dk * cos_sum);
    out.error_estimate += weight * 2.0 * dk * rho;
    // |sin sum| <= pi/(2k) and |cos sum| is at most about log N + 1.
    magnitude += weight * dk * (0.5 * kPi + std::abs(log_two_sin) + std::log(static_cast<double>(big_n)) + 1.0);
  }

  const double envelope_tail = tail_bound(TailFamily::exp_envelope, big_k + 1, x).bound;
  if (envelope_tail <= params.tol / 4.0) {
    out.error_estimate += envelope_tail;
  } else {
    const SeriesValue rest = outer_tail_integral(x, big_k);
    out.value += rest.value;
    out.error_estimate += rest.error_estimate;
    magnitude += std::abs(rest.value);
  }
  out.error_estimate += 4.0 * std::numeric_limits<double>::epsilon() * magnitude;
  return out;
}

}  // namespace rampsi
