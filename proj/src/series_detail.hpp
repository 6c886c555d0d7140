#pragma once

// Elementary kernels shared by the planner and the series evaluators.

#include "rampsi/constants.hpp"

#include <cmath>

namespace rampsi::detail {

/// sin(pi x) with exact reduction of x modulo 2.
inline double sin_pi(double x) {
  const double n = std::nearbyint(x);
  const double r = x - n;  // exact for |x| < 2^52
  const double s = std::sin(kPi * r);
  return std::fmod(n, 2.0) == 0.0 ? s : -s;
}

inline double cos_pi(double x) {
  const double n = std::nearbyint(x);
  const double r = x - n;
  const double c = std::cos(kPi * r);
  return std::fmod(n, 2.0) == 0.0 ? c : -c;
}

/// csch^2(pi y) for y > 0 without overflow.
inline double csch2_pi(double y) {
  const double q = std::exp(-kTwoPi * y);
  const double d = -std::expm1(-kTwoPi * y);
  return 4.0 * q / (d * d);
}

/// 1 / (e^{2 pi y} - 1).
inline double bose_pi(double y) { return 1.0 / std::expm1(kTwoPi * y); }

/// log|k^4 - x^4| split into factors so neither overflow nor cancellation
/// occurs for k near x.
inline double log_abs_quartic_gap(double k, double x) {
  return std::log(std::abs(k - x)) + std::log(k + x) + std::log(k * k + x * x);
}

}  // namespace rampsi::detail
