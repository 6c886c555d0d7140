#include "rampsi/oracles.hpp"

#include "rampsi/bernoulli.hpp"
#include "rampsi/constants.hpp"
#include "rampsi/errors.hpp"
#include "rampsi/params.hpp"
#include "rampsi/quadrature.hpp"

#include <cmath>
#include <complex>
#include <limits>
#include <string>

namespace rampsi::oracle {

namespace {

double bernoulli(int index) { return default_bernoulli_table().as_double(index); }

struct GradedPanels {
  std::vector<std::pair<double, double>> panels;
};

// Geometric mesh (ratio 0.2) on [lo, hi] refining toward one end.
void push_geometric(GradedPanels& mesh, double lo, double hi, bool toward_lo) {
  constexpr double kRatio = 0.2;
  constexpr int kLevels = 24;
  const double len = hi - lo;
  std::vector<std::pair<double, double>> pieces;
  double scale = 1.0;
  for (int level = 0; level < kLevels; ++level) {
    if (toward_lo) {
      pieces.emplace_back(lo + len * scale * kRatio, lo + len * scale);
    } else {
      pieces.emplace_back(hi - len * scale, hi - len * scale * kRatio);
    }
    scale *= kRatio;
  }
  if (toward_lo) {
    pieces.emplace_back(lo, lo + len * scale);
    mesh.panels.insert(mesh.panels.end(), pieces.rbegin(), pieces.rend());
  } else {
    pieces.emplace_back(hi - len * scale, hi);
    mesh.panels.insert(mesh.panels.end(), pieces.begin(), pieces.end());
  }
}

// Panels of width <= max_width covering [a, b]; an end panel whose endpoint
// is flagged singular is replaced by a geometric mesh toward it.
GradedPanels graded_mesh(double a, double b, bool singular_a, bool singular_b, double max_width) {
  GradedPanels mesh;
  const int count = std::max(1, static_cast<int>(std::ceil((b - a) / max_width)));
  const double width = (b - a) / count;
  for (int i = 0; i < count; ++i) {
    const double lo = a + i * width;
    const double hi = (i + 1 == count) ? b : a + (i + 1) * width;
    const bool grade_lo = singular_a && i == 0;
    const bool grade_hi = singular_b && i + 1 == count;
    if (grade_lo && grade_hi) {
      const double mid = 0.5 * (lo + hi);
      push_geometric(mesh, lo, mid, true);
      push_geometric(mesh, mid, hi, false);
    } else if (grade_lo) {
      push_geometric(mesh, lo, hi, true);
    } else if (grade_hi) {
      push_geometric(mesh, lo, hi, false);
    } else {
      mesh.panels.emplace_back(lo, hi);
    }
  }
  return mesh;
}

template <class F>
double integrate_mesh(const F& f, const GradedPanels& mesh, const quad::GaussLegendreRule& rule) {
  double acc = 0.0;
  for (const auto& [lo, hi] : mesh.panels) acc += quad::integrate_panel(f, lo, hi, rule);
  return acc;
}

}  // namespace

void OracleConfig::validate() const {
  if (!(target_tolerance >= kMinTolerance)) {
    throw DomainError("oracle: target_tolerance must be >= 1e-15");
  }
  if (!(shift_threshold > 0.0)) throw DomainError("oracle: shift_threshold must be positive");
  if (max_terms < 1) throw DomainError("oracle: max_terms must be >= 1");
  if (2 * max_terms > default_bernoulli_table().max_index()) {
    throw DomainError("oracle: max_terms exceeds the Bernoulli table");
  }
}

double digamma(double y, const OracleConfig& cfg) {
  cfg.validate();
  if (!(y > 0.0) || !std::isfinite(y)) throw DomainError("digamma oracle: requires y > 0");

  // Extended precision keeps the shift sum and log(y) from eating the last
  // digits of a result that is much smaller than either.
  using ld = long double;
  ld z = y;
  ld shift = 0.0L;
  while (z < cfg.shift_threshold) {
    shift += 1.0L / z;
    z += 1.0L;
  }

  // Stirling series: the truncation error is bounded by the first omitted term.
  const ld inv_z2 = 1.0L / (z * z);
  ld power = inv_z2;
  ld result = std::log(z) - 0.5L / z;
  ld previous = std::numeric_limits<ld>::infinity();
  const ld stop = 0.01L * cfg.target_tolerance;
  for (int j = 1;; ++j) {
    if (j > cfg.max_terms) {
      throw ToleranceError("digamma oracle: tolerance not reached within max_terms");
    }
    const ld term = default_bernoulli_table().at(2 * j).to_long_double() / (2.0L * j) * power;
    if (std::abs(term) <= stop) break;
    if (std::abs(term) >= previous) {
      throw ToleranceError("digamma oracle: asymptotic series diverges before reaching tolerance");
    }
    result -= term;
    previous = std::abs(term);
    power *= inv_z2;
  }
  return static_cast<double>(result - shift);
}

double psi(double x, const OracleConfig& cfg) {
  if (!(x > 0.0)) throw DomainError("psi oracle: requires x > 0");
  return digamma(x + 1.0, cfg);
}

double psi_maclaurin(double x, int n_terms, const OracleConfig& cfg) {
  if (!(std::abs(x) < 1.0)) throw DomainError("psi_maclaurin oracle: requires |x| < 1");
  if (n_terms < 0) throw DomainError("psi_maclaurin oracle: n_terms must be >= 0");
  double acc = -kEulerGamma;
  double power = 1.0;
  for (int n = 1; n <= n_terms; ++n) {
    power *= x;
    const double sign = (n % 2 == 1) ? 1.0 : -1.0;
    acc += sign * power * zeta_direct(n + 1.0, cfg);
  }
  return acc;
}

double psi_maclaurin_truncation_bound(double x, int n_terms) {
  const double ax = std::abs(x);
  return std::pow(ax, n_terms + 1) / (1.0 - ax) * (kPi * kPi / 6.0);
}

ZetaValue zeta_direct_bracketed(double s, const OracleConfig& cfg) {
  cfg.validate();
  if (!(s > 1.0)) throw DomainError("zeta oracle: requires s > 1");

  const int n_direct = std::max(20, static_cast<int>(std::ceil(s)) + 10);
  ZetaValue out;
  out.terms = n_direct;
  for (int n = 1; n <= n_direct; ++n) out.partial_sum += std::pow(static_cast<double>(n), -s);

  const double start = n_direct + 1.0;
  out.lower_tail = std::pow(start, 1.0 - s) / (s - 1.0);
  out.upper_tail = std::pow(static_cast<double>(n_direct), 1.0 - s) / (s - 1.0);

  // Euler-Maclaurin from n = start: the integral, half the first term, then the
  // Bernoulli corrections B_{2j}/(2j)! (s)_{2j-1} start^{1-s-2j}.
  double tail = out.lower_tail + 0.5 * std::pow(start, -s);
  double rising = s;  // (s)_{2j-1}
  double factorial = 2.0;
  double power = std::pow(start, -s - 1.0);
  for (int j = 1;; ++j) {
    if (j > cfg.max_terms) throw ToleranceError("zeta oracle: Euler-Maclaurin tail did not converge");
    const double term = bernoulli(2 * j) / factorial * rising * power;
    tail += term;
    if (std::abs(term) <= 0.01 * cfg.target_tolerance) break;
    rising *= (s + 2.0 * j - 1.0) * (s + 2.0 * j);
    factorial *= (2.0 * j + 1.0) * (2.0 * j + 2.0);
    power /= start * start;
  }
  out.value = out.partial_sum + tail;
  return out;
}

double zeta_direct(double s, const OracleConfig& cfg) { return zeta_direct_bracketed(s, cfg).value; }

double k2_harmonic_sum(double k) {
  if (!(k >= 0.0) || !std::isfinite(k)) throw DomainError("k2_harmonic_sum: requires finite k >= 0");
  if (k == 0.0) return 0.0;
  const double k2 = k * k;
  const int n_direct = static_cast<int>(std::ceil(2.0 * k)) + 16;
  double acc = 0.0;
  for (int n = 1; n < n_direct; ++n) {
    const double dn = n;
    acc += k2 / (dn * (dn * dn + k2));
  }
  const double t = n_direct;
  double tail = 0.5 * std::log1p(k2 / (t * t)) + 0.5 * k2 / (t * (t * t + k2));
  // Euler-Maclaurin corrections (B_{2j}/2j) [t^{-2j} - Re (t + ik)^{-2j}].
  const std::complex<double> z(t, k);
  const std::complex<double> inv_z2 = 1.0 / (z * z);
  std::complex<double> zpow = inv_z2;
  double tpow = 1.0 / (t * t);
  for (int j = 1; j <= 12; ++j) {
    const double term = bernoulli(2 * j) / (2.0 * j) * (tpow - zpow.real());
    tail += term;
    if (std::abs(term) < 1e-20) break;
    tpow /= t * t;
    zpow *= inv_z2;
  }
  return acc + tail;
}

double re_psi_one_plus_ik(double k, const OracleConfig& cfg) {
  cfg.validate();
  if (!(k > 0.0)) throw DomainError("re_psi_one_plus_ik: requires k > 0");
  return k2_harmonic_sum(k) - kEulerGamma;
}

double im_psi_one_plus_ix(double x) {
  if (!(x > 0.0)) throw DomainError("im_psi_one_plus_ix: requires x > 0");
  const double px = kPi * x;
  if (px < 1e-3) {
    // (pi/2)(1/(pi x) + pi x/3 - (pi x)^3/45 + 2 (pi x)^5/945) - 1/(2x)
    const double p2 = px * px;
    return 0.5 * kPi * px * (1.0 / 3.0 - p2 / 45.0 + 2.0 * p2 * p2 / 945.0);
  }
  return 0.5 * kPi / std::tanh(px) - 0.5 / x;
}

QuadratureResult s_integral(double x, int quad_points) {
  if (!(x > 0.0)) throw DomainError("s_integral oracle: requires x > 0");
  if (std::abs(x - std::round(x)) < 1e-6) {
    throw DomainError("s_integral oracle: x is within 1e-6 of an integer");
  }
  if (quad_points < 2) throw DomainError("s_integral oracle: quad_points must be >= 2");

  // k-terms kept while (2 pi k)^2 e^{-2 pi k x} >= 1e-18.
  int k_max = 0;
  while (true) {
    const double k = k_max + 1.0;
    if (kTwoPi * kTwoPi * k * k * std::exp(-kTwoPi * k * x) < 1e-18) break;
    ++k_max;
  }
  auto envelope = [k_max](double v) {
    double acc = 0.0;
    for (int k = 1; k <= k_max; ++k) {
      const double c = kTwoPi * k;
      acc += c * c * std::exp(-c * v);
    }
    return acc;
  };

  // Integrate in v = x + u, one unit interval [j, j+1] at a time, in a local
  // coordinate so log|2 sin(pi v)| is evaluated without cancellation near
  // either integer.
  const double floor_x = std::floor(x);
  const double frac_x = x - floor_x;
  const auto fine = quad::gauss_legendre(quad_points);
  const auto coarse = quad::gauss_legendre(std::max(1, (2 * quad_points) / 3));

  QuadratureResult out;
  double coarse_total = 0.0;
  for (double j = floor_x;; j += 1.0) {
    const double lo = (j == floor_x) ? frac_x : 0.0;
    if (j > floor_x && envelope(j) < 1e-18) {
      // int_0^1 |log(2 sin(pi s))| ds < 1 and the envelope is decreasing.
      out.error_estimate += envelope(j) / (1.0 - std::exp(-kTwoPi));
      break;
    }
    // Left half in s, right half in d = 1 - s, so every singular endpoint
    // sits at an exactly representable 0.
    const double mid = 0.5 * (lo + 1.0);
    auto left = [&](double s) { return std::log(2.0 * std::sin(kPi * s)) * envelope(j + s); };
    auto right = [&](double d) { return std::log(2.0 * std::sin(kPi * d)) * envelope(j + 1.0 - d); };
    const auto left_mesh = graded_mesh(lo, mid, j > floor_x, false, 0.1);
    const auto right_mesh = graded_mesh(0.0, 1.0 - mid, true, false, 0.1);
    out.value += integrate_mesh(left, left_mesh, fine) + integrate_mesh(right, right_mesh, fine);
    coarse_total += integrate_mesh(left, left_mesh, coarse) + integrate_mesh(right, right_mesh, coarse);
    out.panels += static_cast<int>(left_mesh.panels.size() + right_mesh.panels.size());
  }
  out.error_estimate += std::abs(out.value - coarse_total);
  if (out.error_estimate > 1e-10) {
    throw ToleranceError("s_integral oracle: estimated error " + std::to_string(out.error_estimate) +
                         " exceeds 1e-10; increase quad_points");
  }
  return out;
}

QuadratureResult lambert_integral(int m) {
  if (m < 1) throw DomainError("lambert_integral: requires m >= 1");
  const int power = 2 * m - 1;
  auto integrand = [power](double x) {
    if (x == 0.0) return power == 1 ? 1.0 / kTwoPi : 0.0;
    return std::pow(x, power) / std::expm1(kTwoPi * x);
  };
  // x^{2m-1} e^{-2 pi x} < 1e-22 beyond upper.
  double upper = 1.0;
  while (std::pow(upper, power) * std::exp(-kTwoPi * upper) > 1e-22) upper += 1.0;
  const auto mesh = graded_mesh(0.0, upper, false, false, 0.25);
  const auto fine = quad::gauss_legendre(24);
  const auto coarse = quad::gauss_legendre(16);
  QuadratureResult out;
  out.value = integrate_mesh(integrand, mesh, fine);
  out.error_estimate = std::abs(out.value - integrate_mesh(integrand, mesh, coarse)) +
                       std::pow(upper, power) * std::exp(-kTwoPi * upper) * 2.0;
  out.panels = static_cast<int>(mesh.panels.size());
  return out;
}

}  // namespace rampsi::oracle
