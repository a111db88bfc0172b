#include "swwave/closedform.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace swwave {

namespace {

constexpr double kEquilibriumTol = 1e-12;

// cot(pi r) for r in [0,1); +inf at r = 0.
double half_phase_cot(double r) noexcept {
  const double s = std::sin(std::numbers::pi * r);
  const double c = std::cos(std::numbers::pi * r);
  if (s == 0.0) return std::numeric_limits<double>::infinity();
  return c / s;
}

// Strong-case denominator factor W(alpha) = C0^2 sin^2 + cos^2, always >= min(1, C0^2) > 0.
double strong_weight(double ratio, double alpha) noexcept {
  const double s = std::sin(alpha);
  const double c = std::cos(alpha);
  return ratio * ratio * s * s + c * c;
}

// Moderate denominators: K0^2 cosh^2 + sinh^2 (coth branch),
// K0^2 sinh^2 + cosh^2 (tanh branch). Both bounded away from zero.
double coth_weight(double ratio, double beta) noexcept {
  const double sh = std::sinh(beta);
  const double ch = std::cosh(beta);
  return ratio * ratio * ch * ch + sh * sh;
}

double tanh_weight(double ratio, double beta) noexcept {
  const double sh = std::sinh(beta);
  const double ch = std::cosh(beta);
  return ratio * ratio * sh * sh + ch * ch;
}

// Phase part P with x(t) = n0 + r0 + t + (P(t) - P(0)).
//
// The Strong case unwraps X/2 = arccot(C0 tan alpha) through the two-argument
// arctangent of (cos alpha, C0 sin alpha), which is smooth across the poles
// of tan; its only branch cut sits at alpha = -pi/2 mod 2 pi, counted by the
// floor term. The build step never anchors alpha0 on that cut (alpha0 lies in
// (-pi/2, pi/2]), so the offset constant is always taken on a smooth stretch.
double strong_phase_part(double ratio, double alpha) noexcept {
  return std::atan2(std::cos(alpha), ratio * std::sin(alpha)) / std::numbers::pi -
         2.0 * std::floor((alpha + 0.5 * std::numbers::pi) / two_pi);
}

double coth_phase_part(double ratio, double beta) noexcept {
  const double y = beta == 0.0 ? std::numeric_limits<double>::infinity()
                               : ratio / std::tanh(beta);
  return arccot(y) / std::numbers::pi - (beta < 0.0 ? 1.0 : 0.0);
}

double tanh_phase_part(double ratio, double beta) noexcept {
  return arccot(ratio * std::tanh(beta)) / std::numbers::pi;
}

}  // namespace

const char* to_string(Regime r) noexcept {
  switch (r) {
    case Regime::Still: return "Still";
    case Regime::Strong: return "Strong";
    case Regime::Moderate: return "Moderate";
    case Regime::CurrentTwo: return "CurrentTwo";
  }
  return "?";
}

const char* to_string(PathBranch b) noexcept {
  switch (b) {
    case PathBranch::None: return "none";
    case PathBranch::Coth: return "coth";
    case PathBranch::Tanh: return "tanh";
    case PathBranch::Equilibrium: return "equilibrium";
  }
  return "?";
}

ClosedFormTrajectory ClosedFormTrajectory::build(double c0, double x0, double z0) {
  if (!std::isfinite(c0) || !std::isfinite(x0) || !std::isfinite(z0))
    throw std::invalid_argument("ClosedFormTrajectory: inputs must be finite");
  if (z0 < 0.0)
    throw std::invalid_argument("ClosedFormTrajectory: z0 must be nonnegative");

  ClosedFormTrajectory traj;
  traj.c0_ = c0;
  traj.x0_ = x0;
  traj.z0_ = z0;
  traj.n0_ = std::floor(x0);
  traj.r0_ = x0 - traj.n0_;
  const double r0 = traj.r0_;
  const double cos_X0 = std::cos(two_pi * r0);

  // Rest points exist for c0 in {0} union (0,2]; cos X0 = 1 - c0 there.
  const bool has_rest = c0 == 0.0 || (c0 > 0.0 && c0 <= 2.0);
  if (has_rest && std::abs(cos_X0 - (1.0 - c0)) <= kEquilibriumTol) {
    traj.regime_ = c0 == 0.0 ? Regime::Still
                 : c0 == 2.0 ? Regime::CurrentTwo
                             : Regime::Moderate;
    traj.branch_ = PathBranch::Equilibrium;
    traj.sin_X0_ = c0 == 0.0 ? 0.0 : std::sin(two_pi * r0);
    return traj;
  }

  if (c0 == 0.0) {
    traj.regime_ = Regime::Still;
    traj.k_ = half_phase_cot(r0);
    traj.u0_ = traj.k_;
    traj.rate_ = two_pi;
    traj.denom0_ = 1.0 + traj.k_ * traj.k_;
    return traj;
  }

  if (c0 * (c0 - 2.0) > 0.0) {
    traj.regime_ = Regime::Strong;
    traj.ratio_ = std::sqrt((c0 - 2.0) / c0);
    // alpha0 in (-pi/2, pi/2] with tan(alpha0) = cot(pi r0) / C0; the atan2
    // form also covers r0 = 0 where the cotangent is infinite.
    traj.u0_ = std::atan2(std::cos(std::numbers::pi * r0),
                          traj.ratio_ * std::sin(std::numbers::pi * r0));
    traj.rate_ = -std::numbers::pi * c0 * traj.ratio_;
    traj.k_ = -2.0 * traj.u0_ / (c0 * traj.ratio_);
    traj.denom0_ = strong_weight(traj.ratio_, traj.u0_);
    return traj;
  }

  if (c0 == 2.0) {
    traj.regime_ = Regime::CurrentTwo;
    traj.k_ = std::tan(std::numbers::pi * r0);
    traj.u0_ = traj.k_;
    traj.rate_ = two_pi;
    traj.denom0_ = 1.0 + traj.k_ * traj.k_;
    return traj;
  }

  // 0 < c0 < 2.
  traj.regime_ = Regime::Moderate;
  traj.ratio_ = std::sqrt((2.0 - c0) / c0);
  const double y0 = half_phase_cot(r0);
  if (std::abs(y0) > traj.ratio_) {
    traj.branch_ = PathBranch::Coth;
    traj.u0_ = std::isfinite(y0) ? std::atanh(traj.ratio_ / y0) : 0.0;
    traj.denom0_ = coth_weight(traj.ratio_, traj.u0_);
  } else {
    traj.branch_ = PathBranch::Tanh;
    traj.u0_ = std::atanh(y0 / traj.ratio_);
    traj.denom0_ = tanh_weight(traj.ratio_, traj.u0_);
  }
  traj.rate_ = std::numbers::pi * c0 * traj.ratio_;
  traj.k_ = 2.0 * traj.u0_ / (c0 * traj.ratio_);
  return traj;
}

ClosedFormTrajectory::Core ClosedFormTrajectory::core(double t) const noexcept {
  Core out{};

  if (branch_ == PathBranch::Equilibrium) {
    out.x = n0_ + (r0_ + t);
    out.z = z0_ * std::exp(two_pi * sin_X0_ * t);
    out.dx = 1.0;
    out.dz = two_pi * sin_X0_ * out.z;
    out.X = two_pi * (n0_ + r0_);
    return out;
  }

  switch (regime_) {
    case Regime::Still: {
      const double y = two_pi * t + k_;
      const double yy = 1.0 + y * y;
      const double part = arccot(y) / std::numbers::pi;
      const double part0 = arccot(k_) / std::numbers::pi;
      out.x = n0_ + (r0_ + t + (part - part0));
      out.z = z0_ * (yy / denom0_);
      out.dx = (y * y - 1.0) / yy;
      out.dz = 4.0 * std::numbers::pi * z0_ * y / denom0_;
      out.X = two_pi * (n0_ + r0_ + (part - part0));
      return out;
    }
    case Regime::Strong: {
      const double alpha = u0_ + rate_ * t;
      const double w = strong_weight(ratio_, alpha);
      const double part = strong_phase_part(ratio_, alpha);
      const double part0 = strong_phase_part(ratio_, u0_);
      const double sin_a = std::sin(alpha);
      out.x = n0_ + (r0_ + t + (part - part0));
      out.z = z0_ * (w / denom0_);
      out.dx = ((ratio_ * ratio_ - 1.0) * sin_a * sin_a + c0_ - 1.0) / w;
      out.dz = two_pi * out.z * ratio_ * std::sin(2.0 * alpha) / w;
      out.X = two_pi * (n0_ + r0_ + (part - part0));
      return out;
    }
    case Regime::Moderate: {
      const double beta = u0_ + rate_ * t;
      if (branch_ == PathBranch::Coth) {
        const double w = coth_weight(ratio_, beta);
        const double part = coth_phase_part(ratio_, beta);
        const double part0 = coth_phase_part(ratio_, u0_);
        out.x = n0_ + (r0_ + t + (part - part0));
        out.z = z0_ * (w / denom0_);
        out.dx = 1.0 + (2.0 - c0_) / w;
        out.dz = two_pi * out.z * ratio_ * std::sinh(2.0 * beta) / w;
        out.X = two_pi * (n0_ + r0_ + (part - part0));
      } else {
        const double w = tanh_weight(ratio_, beta);
        const double part = tanh_phase_part(ratio_, beta);
        const double part0 = tanh_phase_part(ratio_, u0_);
        const double sh = std::sinh(beta);
        out.x = n0_ + (r0_ + t + (part - part0));
        out.z = z0_ * (w / denom0_);
        out.dx = ((ratio_ * ratio_ + 1.0) * sh * sh + c0_ - 1.0) / w;
        out.dz = two_pi * out.z * ratio_ * std::sinh(2.0 * beta) / w;
        out.X = two_pi * (n0_ + r0_ + (part - part0));
      }
      return out;
    }
    case Regime::CurrentTwo: {
      const double y = two_pi * t + k_;
      const double yy = 1.0 + y * y;
      const double part = std::atan(y) / std::numbers::pi;
      const double part0 = std::atan(k_) / std::numbers::pi;
      out.x = n0_ + (r0_ + t + (part - part0));
      out.z = z0_ * (yy / denom0_);
      out.dx = (3.0 + y * y) / yy;
      out.dz = two_pi * out.z * 2.0 * y / yy;
      out.X = two_pi * (n0_ + r0_ + (part - part0));
      return out;
    }
  }
  return out;
}

PathPoint ClosedFormTrajectory::evaluate(double t) const noexcept {
  const Core c = core(t);
  return {c.x, c.z};
}

LabRates ClosedFormTrajectory::derivatives(double t) const noexcept {
  const Core c = core(t);
  return {c.dx, c.dz};
}

double ClosedFormTrajectory::frame_phase(double t) const noexcept { return core(t).X; }

}  // namespace swwave
