#pragma once

#include <cstddef>
#include <span>

#include "swwave/classify.hpp"
#include "swwave/wavefield.hpp"

namespace swwave::verify {

/// Measurement routines backing the verify command and the acceptance
/// checks. Each returns raw error magnitudes; callers own the thresholds.

struct GapXZ {
  double x;
  double z;
};

/// Max pointwise gap between the closed form and an RK4 run over the step
/// grid from t0 to t1.
GapXZ oracle_gap(double c0, double x0, double z0, double t0, double t1, double step);

struct ConservationDrift {
  double initial_value;        // Z (cos X + c0 - 1) at t0
  double max_relative_drift;   // max |I(t) - I(0)| / |I(0)|
};

/// Drift of the conserved quantity along an RK4 trajectory, sampled at every
/// grid point of the window chosen by conservation_window(c0).
ConservationDrift conservation_rk4(double c0, double x0, double z0, double step);

/// Same quantity sampled along the closed form.
ConservationDrift conservation_closedform(double c0, double x0, double z0, std::size_t samples);

/// Max gap between the analytic path derivatives and the right-hand side of
/// the particle equations evaluated at the path point, at random times drawn
/// from residual_window(c0).
GapXZ residual_gap(double c0, double x0, double z0, std::size_t samples, unsigned seed);

/// Number of sign-table entries whose stated derivative signs disagree with
/// the analytic derivatives probed inside the interval. Zero when healthy.
std::size_t sign_table_mismatches(double c0, double x0);

/// Least-squares slope of log10(max endpoint error) against log10(step) for
/// RK4 against the closed form. Classical RK4 gives ~4.
double convergence_slope(double c0, double x0, double z0, double t_end,
                         std::span<const double> steps);

struct DriftCheck {
  double closed_form;  // x(T) - x(0) from the analytic path
  double integrator;   // same displacement measured with RK4
};

/// Per-period drift measured both ways; Strong regime only.
DriftCheck drift_cross_check(double c0, double x0, double z0, double step);

/// Field identity measurements over random points.
double bed_velocity_max(double c0, std::size_t samples, unsigned seed);
double surface_condition_gap(double c0, std::size_t samples, unsigned seed);
double mean_flow_gap(std::size_t samples, unsigned seed);

/// Observed order of the discretised wave-equation residual over
/// steps {1e-2, 1e-3, 1e-4}; ~2 for a second-order stencil.
double wave_equation_order(std::size_t samples, unsigned seed);

/// Windows sized so the sampled conserved quantity stays well conditioned:
/// heights grow exponentially for 0 < c0 < 2, which amplifies the roundoff
/// of the cos X + c0 - 1 factor recomputed from (x, z, t) samples.
TimeWindow conservation_window(double c0);
TimeWindow residual_window(double c0);

}  // namespace swwave::verify
