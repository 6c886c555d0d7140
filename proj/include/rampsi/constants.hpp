#pragma once

#include <numbers>

namespace rampsi {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Euler's constant. Used only by the classical oracles and for reporting;
/// the series evaluators never consume it.
inline constexpr double kEulerGamma = std::numbers::egamma;

}  // namespace rampsi
