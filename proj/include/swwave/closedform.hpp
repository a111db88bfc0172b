#pragma once

#include "swwave/kinematics.hpp"

namespace swwave {

/// Case split of the analytic particle paths by current strength.
///   Still      c0 = 0
///   Strong     c0 (c0 - 2) > 0, periodic moving-frame motion
///   Moderate   0 < c0 < 2, hyperbolic substitution with two branches
///   CurrentTwo c0 = 2, degenerate boundary with its own primitive
enum class Regime { Still, Strong, Moderate, CurrentTwo };

/// Sub-branch of a trajectory. Coth/Tanh apply to Moderate only and are
/// fixed at build time (the separating level set consists of equilibria, so
/// a trajectory never changes branch). Equilibrium marks initial data placed
/// on a rest point of the moving-frame system.
enum class PathBranch { None, Coth, Tanh, Equilibrium };

struct PathPoint {
  double x;
  double z;
};

const char* to_string(Regime r) noexcept;
const char* to_string(PathBranch b) noexcept;

/// Exact solution of the particle equations for one initial condition.
/// Immutable after build; evaluation at any t is a pure function, so
/// concurrent use needs no coordination.
///
/// The horizontal coordinate is x(t) = t + X(t) / 2 pi with
///   X = 2 arccot(2 pi t + k)                     (Still)
///   X = 2 arccot(C0 tan(alpha(t))), unwrapped    (Strong)
///   X = 2 arccot(K0 coth(beta)) or 2 arccot(K0 tanh(beta))   (Moderate)
///   tan(X/2) = 2 pi t + k                        (c0 = 2)
/// and the height follows from the conserved quantity z (cos X + c0 - 1),
/// evaluated through cancellation-free algebraic forms of the denominator.
class ClosedFormTrajectory {
 public:
  /// Dispatches on c0, fixes all constants from (x0, z0). Requires z0 >= 0
  /// and finite inputs. Initial data within 1e-12 of a moving-frame rest
  /// point gets the explicit equilibrium solution.
  static ClosedFormTrajectory build(double c0, double x0, double z0);

  PathPoint evaluate(double t) const noexcept;
  LabRates derivatives(double t) const noexcept;

  /// Unwrapped moving-frame phase X(t) = 2 pi (x(t) - t), continuous in t.
  double frame_phase(double t) const noexcept;

  Regime regime() const noexcept { return regime_; }
  PathBranch branch() const noexcept { return branch_; }
  double current_strength() const noexcept { return c0_; }
  double initial_x() const noexcept { return x0_; }
  double initial_z() const noexcept { return z0_; }

  /// The constant k with y = 2 pi t + k in the case primitive.
  double integration_constant() const noexcept { return k_; }

  /// sqrt((c0-2)/c0) in the Strong regime, sqrt((2-c0)/c0) in the Moderate
  /// regime, zero otherwise.
  double substitution_ratio() const noexcept { return ratio_; }

 private:
  ClosedFormTrajectory() = default;

  struct Core {
    double x;
    double z;
    double dx;
    double dz;
    double X;
  };
  Core core(double t) const noexcept;

  Regime regime_ = Regime::Still;
  PathBranch branch_ = PathBranch::None;
  double c0_ = 0.0;
  double x0_ = 0.0;
  double z0_ = 0.0;
  double n0_ = 0.0;     // integer part of x0
  double r0_ = 0.0;     // fractional part of x0
  double k_ = 0.0;      // integration constant
  double ratio_ = 0.0;  // C0 or K0
  double u0_ = 0.0;     // initial substitution phase: k, alpha0, beta0 or w0
  double rate_ = 0.0;   // d/dt of the substitution phase
  double denom0_ = 1.0; // case denominator at t = 0, for the z ratio
  double sin_X0_ = 0.0; // equilibrium growth rate factor
};

}  // namespace swwave
