#include "swwave/wavefield.hpp"

namespace swwave {

PhysicalScales PhysicalScales::make(double depth, double wavelength, double amplitude,
                                    double gravity, double density) {
  if (!(depth > 0.0) || !std::isfinite(depth))
    throw std::invalid_argument("PhysicalScales: depth must be positive");
  if (!(wavelength > 0.0) || !std::isfinite(wavelength))
    throw std::invalid_argument("PhysicalScales: wavelength must be positive");
  if (!(amplitude >= 0.0) || !std::isfinite(amplitude))
    throw std::invalid_argument("PhysicalScales: amplitude must be nonnegative");
  if (!(gravity > 0.0) || !std::isfinite(gravity))
    throw std::invalid_argument("PhysicalScales: gravity must be positive");
  if (!(density > 0.0) || !std::isfinite(density))
    throw std::invalid_argument("PhysicalScales: density must be positive");
  return {depth, wavelength, amplitude, gravity, density};
}

double dimensionalize(const PhysicalScales& s, Quantity kind, double value, double z,
                      double ambient_pressure) {
  const double eps = s.amplitude_parameter();
  switch (kind) {
    case Quantity::X:
      return s.wavelength * value;
    case Quantity::Z:
      return s.depth * value;
    case Quantity::T:
      return s.time_scale() * value;
    case Quantity::Eta:
      return s.amplitude * value;
    case Quantity::U:
      return eps * s.velocity_scale() * value;
    case Quantity::V:
      return eps * s.depth * s.velocity_scale() / s.wavelength * value;
    case Quantity::P: {
      const double hydrostatic = s.density * s.gravity * s.depth * (1.0 - z);
      return ambient_pressure + hydrostatic + s.density * s.gravity * s.depth * eps * value;
    }
  }
  throw std::invalid_argument("dimensionalize: unknown quantity kind");
}

double nondimensionalize(const PhysicalScales& s, Quantity kind, double value, double z,
                         double ambient_pressure) {
  const double eps = s.amplitude_parameter();
  switch (kind) {
    case Quantity::X:
      return value / s.wavelength;
    case Quantity::Z:
      return value / s.depth;
    case Quantity::T:
      return value / s.time_scale();
    case Quantity::Eta:
      return value / s.amplitude;
    case Quantity::U:
      return value / (eps * s.velocity_scale());
    case Quantity::V:
      return value * s.wavelength / (eps * s.depth * s.velocity_scale());
    case Quantity::P: {
      const double hydrostatic = s.density * s.gravity * s.depth * (1.0 - z);
      return (value - ambient_pressure - hydrostatic) / (s.density * s.gravity * s.depth * eps);
    }
  }
  throw std::invalid_argument("nondimensionalize: unknown quantity kind");
}

double wave_equation_residual(const WaveField& field, double x, double t, double h) {
  const double fd_tt = (field.surface_elevation(x, t - h) - 2.0 * field.surface_elevation(x, t) +
                        field.surface_elevation(x, t + h)) /
                       (h * h);
  const double eta_xx = -two_pi * two_pi * field.surface_elevation(x, t);
  return std::abs(fd_tt - eta_xx);
}

double divergence_residual(const WaveField& field, double x, double z, double t, double h) {
  const double fd_ux =
      (field.velocity(x + h, z, t).u - field.velocity(x - h, z, t).u) / (2.0 * h);
  // v = 2 pi z sin(...) is linear in z.
  const double dv_dz = two_pi * std::sin(wave_angle(x - t));
  return std::abs(fd_ux + dv_dz);
}

}  // namespace swwave
