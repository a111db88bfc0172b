#pragma once

#include <stdexcept>

#include "swwave/phase.hpp"

namespace swwave {

/// Dimensional parameters of the physical problem. Lengths, gravity and
/// density are strictly positive; the wave amplitude may be zero.
struct PhysicalScales {
  double depth;       // undisturbed depth h0
  double wavelength;  // typical wavelength lambda
  double amplitude;   // typical surface amplitude a
  double gravity;     // gravitational acceleration g
  double density;     // fluid density rho

  /// Amplitude parameter eps = a / h0.
  double amplitude_parameter() const noexcept { return amplitude / depth; }
  /// Shallowness parameter delta = h0 / lambda.
  double shallowness_parameter() const noexcept { return depth / wavelength; }
  /// Time unit lambda / sqrt(g h0).
  double time_scale() const noexcept { return wavelength / std::sqrt(gravity * depth); }
  /// Velocity unit sqrt(g h0).
  double velocity_scale() const noexcept { return std::sqrt(gravity * depth); }

  static PhysicalScales make(double depth, double wavelength, double amplitude,
                             double gravity, double density);
};

/// Which nondimensional quantity a value represents.
enum class Quantity { X, Z, T, Eta, U, V, P };

/// Map a nondimensional value back to physical units. Pressure additionally
/// needs the nondimensional height z and the ambient surface pressure p0.
double dimensionalize(const PhysicalScales& scales, Quantity kind, double value,
                      double z = 0.0, double ambient_pressure = 0.0);

/// Inverse of dimensionalize.
double nondimensionalize(const PhysicalScales& scales, Quantity kind, double value,
                         double z = 0.0, double ambient_pressure = 0.0);

struct Velocity {
  double u;
  double v;
};

/// Linear irrotational shallow-water solution for the right-moving cosine
/// profile. All fields are periodic with period 1 in x - t:
///   eta(x,t) = p(x,t) = cos(2 pi (x - t))
///   u(x,z,t) = cos(2 pi (x - t)) + c0            (independent of z)
///   v(x,z,t) = 2 pi z sin(2 pi (x - t))
/// The constant c0 is the mean of u over one wavelength, i.e. the strength
/// of the underlying uniform current.
class WaveField {
 public:
  explicit WaveField(double current_strength) : c0_(current_strength) {
    if (!std::isfinite(current_strength))
      throw std::invalid_argument("WaveField: current strength must be finite");
  }

  double current_strength() const noexcept { return c0_; }

  double surface_elevation(double x, double t) const noexcept {
    return std::cos(wave_angle(x - t));
  }

  /// Time derivative of the surface elevation, eta_t = 2 pi sin(2 pi (x - t)).
  double surface_elevation_dt(double x, double t) const noexcept {
    return two_pi * std::sin(wave_angle(x - t));
  }

  /// Depth independent in the shallow limit.
  double pressure(double x, double t) const noexcept {
    return std::cos(wave_angle(x - t));
  }

  Velocity velocity(double x, double z, double t) const noexcept {
    const double angle = wave_angle(x - t);
    return {std::cos(angle) + c0_, two_pi * z * std::sin(angle)};
  }

 private:
  double c0_;
};

/// |FD_tt eta - eta_xx| at (x,t) with the exact second space derivative and a
/// centred second difference in time of step h. The symmetric double-FD
/// residual vanishes identically for a travelling profile (both stencils see
/// the same phase samples), so the time derivative is the discretised one.
double wave_equation_residual(const WaveField& field, double x, double t, double h = 1e-4);

/// |FD_x u + dv/dz| at (x,z,t); v is linear in z so its z-derivative is exact.
double divergence_residual(const WaveField& field, double x, double z, double t,
                           double h = 1e-4);

}  // namespace swwave
