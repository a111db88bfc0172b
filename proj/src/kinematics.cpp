#include "swwave/kinematics.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace swwave {

LabRates rhs_lab(const ParticleState& state, double c0) noexcept {
  const double angle = wave_angle(state.x - state.t);
  return {std::cos(angle) + c0, two_pi * state.z * std::sin(angle)};
}

FrameRates rhs_moving(const FrameState& state, double c0) noexcept {
  return {two_pi * std::cos(state.X) + two_pi * (c0 - 1.0),
          two_pi * state.Z * std::sin(state.X)};
}

FrameState to_moving_frame(const ParticleState& p) noexcept {
  return {two_pi * (p.x - p.t), p.z};
}

ParticleState from_moving_frame(const FrameState& f, double t) noexcept {
  return {t + f.X / two_pi, f.Z, t};
}

double first_integral(const FrameState& f, double c0) noexcept {
  return f.Z * (std::cos(f.X) + c0 - 1.0);
}

namespace {

// Scalar accumulator with Neumaier compensation. The plain update
// "x += increment" rounds at one ulp of x per step, which is the dominant
// error source on long grids; the compensated form keeps the lost low bits.
struct Compensated {
  double value;
  double carry = 0.0;

  void add(double increment) noexcept {
    const double sum = value + increment;
    if (std::abs(value) >= std::abs(increment))
      carry += (value - sum) + increment;
    else
      carry += (increment - sum) + value;
    value = sum;
  }
  double get() const noexcept { return value + carry; }
};

struct Rates {
  double x;
  double z;
};

inline Rates eval(double x, double z, double t, double c0) noexcept {
  const double angle = wave_angle(x - t);
  return {std::cos(angle) + c0, two_pi * z * std::sin(angle)};
}

}  // namespace

std::vector<ParticleState> integrate(const ParticleState& initial, double c0, double t_end,
                                     const OdeSettings& settings) {
  if (!(settings.step > 0.0) || !std::isfinite(settings.step))
    throw std::invalid_argument("integrate: step size must be positive");
  if (initial.z < 0.0)
    throw std::invalid_argument("integrate: z must be nonnegative");
  if (!std::isfinite(initial.x) || !std::isfinite(initial.z) || !std::isfinite(initial.t) ||
      !std::isfinite(c0) || !std::isfinite(t_end))
    throw std::invalid_argument("integrate: inputs must be finite");

  const double span = t_end - initial.t;
  const double direction = span < 0.0 ? -1.0 : 1.0;
  const long steps =
      span == 0.0 ? 0 : static_cast<long>(std::ceil(std::abs(span) / settings.step - 1e-9));

  std::vector<ParticleState> out;
  out.reserve(static_cast<std::size_t>(steps) + 1);
  out.push_back(initial);

  Compensated x{initial.x};
  Compensated z{initial.z};
  for (long i = 0; i < steps; ++i) {
    const double t = initial.t + direction * static_cast<double>(i) * settings.step;
    const double t_next =
        (i + 1 == steps) ? t_end
                         : initial.t + direction * static_cast<double>(i + 1) * settings.step;
    const double h = t_next - t;
    const double xv = x.get();
    const double zv = z.get();

    const Rates k1 = eval(xv, zv, t, c0);
    const Rates k2 = eval(xv + 0.5 * h * k1.x, zv + 0.5 * h * k1.z, t + 0.5 * h, c0);
    const Rates k3 = eval(xv + 0.5 * h * k2.x, zv + 0.5 * h * k2.z, t + 0.5 * h, c0);
    const Rates k4 = eval(xv + h * k3.x, zv + h * k3.z, t_next, c0);

    x.add(h / 6.0 * ((k1.x + k4.x) + 2.0 * (k2.x + k3.x)));
    z.add(h / 6.0 * ((k1.z + k4.z) + 2.0 * (k2.z + k3.z)));

    const ParticleState next{x.get(), z.get(), t_next};
    if (!std::isfinite(next.x) || !std::isfinite(next.z))
      throw std::runtime_error("integrate: state became non-finite at t = " +
                               std::to_string(t_next));
    out.push_back(next);
  }
  return out;
}

}  // namespace swwave
