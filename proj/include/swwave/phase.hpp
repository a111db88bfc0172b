#pragma once

#include <cmath>
#include <numbers>

namespace swwave {

inline constexpr double two_pi = 2.0 * std::numbers::pi;

/// Fractional part of a wave phase, reduced to [0,1).
/// Reducing before multiplying by 2*pi keeps the trig arguments small and
/// makes every field exactly periodic in x - t with period 1.
inline double phase_fraction(double s) noexcept { return s - std::floor(s); }

/// Angle 2*pi*(s mod 1) ready for cos/sin.
inline double wave_angle(double s) noexcept { return two_pi * phase_fraction(s); }

/// Inverse cotangent with range (0, pi). Handles +-inf arguments.
inline double arccot(double v) noexcept { return std::atan2(1.0, v); }

}  // namespace swwave
