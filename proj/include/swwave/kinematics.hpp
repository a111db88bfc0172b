#pragma once

#include <vector>

#include "swwave/phase.hpp"

namespace swwave {

/// Lab-frame particle coordinates at time t. The bed sits at z = 0.
struct ParticleState {
  double x;
  double z;
  double t;
};

/// Coordinates in the frame moving with the wave: X = 2 pi (x - t), Z = z.
/// X lives on the real line (unwrapped), not reduced mod 2 pi.
struct FrameState {
  double X;
  double Z;
};

struct LabRates {
  double dx_dt;
  double dz_dt;
};

struct FrameRates {
  double dX_dt;
  double dZ_dt;
};

enum class OdeMethod { ClassicRk4 };

struct OdeSettings {
  double step = 1e-4;
  OdeMethod method = OdeMethod::ClassicRk4;
};

/// Lab-frame particle equations:
///   dx/dt = cos(2 pi (x - t)) + c0
///   dz/dt = 2 pi z sin(2 pi (x - t))
LabRates rhs_lab(const ParticleState& state, double c0) noexcept;

/// Autonomous moving-frame equations:
///   dX/dt = 2 pi cos X + 2 pi (c0 - 1)
///   dZ/dt = 2 pi Z sin X
FrameRates rhs_moving(const FrameState& state, double c0) noexcept;

FrameState to_moving_frame(const ParticleState& p) noexcept;
ParticleState from_moving_frame(const FrameState& f, double t) noexcept;

/// Quantity Z (cos X + c0 - 1), constant along exact trajectories wherever
/// cos X + c0 - 1 does not vanish. Used throughout the tests as a drift
/// detector for the integrator.
double first_integral(const FrameState& f, double c0) noexcept;

/// Fixed-step classical Runge-Kutta 4 solution of the particle equations.
/// Returns the full step grid including both endpoints, with monotone t.
/// t_end < initial.t integrates backwards. State accumulation is
/// compensated (Neumaier) so that roundoff stays near one ulp even over
/// hundreds of thousands of steps. Throws std::runtime_error if the state
/// stops being finite and std::invalid_argument on a bad step or z < 0.
std::vector<ParticleState> integrate(const ParticleState& initial, double c0, double t_end,
                                     const OdeSettings& settings = {});

}  // namespace swwave
