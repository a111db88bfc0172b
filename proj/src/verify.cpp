#include "swwave/verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "swwave/kinematics.hpp"

namespace swwave::verify {

namespace {

int sign_of(double v) { return v > 0.0 ? 1 : v < 0.0 ? -1 : 0; }

// 10-point Gauss-Legendre rule on [a, b].
double gauss10(double a, double b, const auto& f) {
  static constexpr double nodes[10] = {
      -0.9739065285171717, -0.8650633666889845, -0.6794095682990244, -0.4333953941292472,
      -0.14887433898163122, 0.14887433898163122, 0.4333953941292472, 0.6794095682990244,
      0.8650633666889845,  0.9739065285171717};
  static constexpr double weights[10] = {
      0.06667134430868814, 0.14945134915058059, 0.21908636251598204, 0.26926671930999635,
      0.29552422471475287, 0.29552422471475287, 0.26926671930999635, 0.21908636251598204,
      0.14945134915058059, 0.06667134430868814};
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  double acc = 0.0;
  for (int i = 0; i < 10; ++i) acc += weights[i] * f(mid + half * nodes[i]);
  return half * acc;
}

double fit_slope(std::span<const double> log_x, std::span<const double> log_y) {
  const double n = static_cast<double>(log_x.size());
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < log_x.size(); ++i) {
    sx += log_x[i];
    sy += log_y[i];
    sxx += log_x[i] * log_x[i];
    sxy += log_x[i] * log_y[i];
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace

TimeWindow conservation_window(double c0) {
  if (c0 > 0.0 && c0 < 2.0) return {0.0, 1.2};
  return {0.0, 3.0};
}

TimeWindow residual_window(double c0) {
  if (c0 == 0.0) return {-1.0, 1.0};
  return {0.0, 1.0};
}

GapXZ oracle_gap(double c0, double x0, double z0, double t0, double t1, double step) {
  const ClosedFormTrajectory traj = ClosedFormTrajectory::build(c0, x0, z0);
  const auto grid = integrate({x0, z0, t0}, c0, t1, {step});
  GapXZ gap{0.0, 0.0};
  for (const ParticleState& s : grid) {
    const PathPoint p = traj.evaluate(s.t);
    gap.x = std::max(gap.x, std::abs(p.x - s.x));
    gap.z = std::max(gap.z, std::abs(p.z - s.z));
  }
  return gap;
}

ConservationDrift conservation_rk4(double c0, double x0, double z0, double step) {
  const TimeWindow window = conservation_window(c0);
  const auto grid = integrate({x0, z0, window.t_begin}, c0, window.t_end, {step});
  const double i0 = first_integral(to_moving_frame(grid.front()), c0);
  double drift = 0.0;
  for (const ParticleState& s : grid)
    drift = std::max(drift, std::abs(first_integral(to_moving_frame(s), c0) - i0));
  return {i0, drift / std::abs(i0)};
}

ConservationDrift conservation_closedform(double c0, double x0, double z0, std::size_t samples) {
  const TimeWindow window = conservation_window(c0);
  const ClosedFormTrajectory traj = ClosedFormTrajectory::build(c0, x0, z0);
  const double dt = (window.t_end - window.t_begin) / static_cast<double>(samples - 1);
  double i0 = 0.0;
  double drift = 0.0;
  for (std::size_t i = 0; i < samples; ++i) {
    const double t = window.t_begin + static_cast<double>(i) * dt;
    const PathPoint p = traj.evaluate(t);
    const double value = first_integral(to_moving_frame({p.x, p.z, t}), c0);
    if (i == 0)
      i0 = value;
    else
      drift = std::max(drift, std::abs(value - i0));
  }
  return {i0, drift / std::abs(i0)};
}

GapXZ residual_gap(double c0, double x0, double z0, std::size_t samples, unsigned seed) {
  const TimeWindow window = residual_window(c0);
  const ClosedFormTrajectory traj = ClosedFormTrajectory::build(c0, x0, z0);
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> pick(window.t_begin, window.t_end);
  GapXZ gap{0.0, 0.0};
  for (std::size_t i = 0; i < samples; ++i) {
    const double t = pick(rng);
    const PathPoint p = traj.evaluate(t);
    const LabRates analytic = traj.derivatives(t);
    const LabRates ode = rhs_lab({p.x, p.z, t}, c0);
    gap.x = std::max(gap.x, std::abs(analytic.dx_dt - ode.dx_dt));
    gap.z = std::max(gap.z, std::abs(analytic.dz_dt - ode.dz_dt));
  }
  return gap;
}

std::size_t sign_table_mismatches(double c0, double x0) {
  const SignTable table = sign_table(c0, x0);
  const ClosedFormTrajectory traj = ClosedFormTrajectory::build(c0, x0, 0.1);
  std::size_t bad = 0;
  for (const SignInterval& iv : table.intervals) {
    double probe;
    if (std::isfinite(iv.t_begin) && std::isfinite(iv.t_end))
      probe = 0.5 * (iv.t_begin + iv.t_end);
    else if (std::isfinite(iv.t_begin))
      probe = iv.t_begin + 0.5;
    else if (std::isfinite(iv.t_end))
      probe = iv.t_end - 0.5;
    else
      probe = 0.75;  // unbounded both ways: equilibrium row
    const LabRates d = traj.derivatives(probe);
    if (sign_of(d.dx_dt) != iv.sign_dx || sign_of(d.dz_dt) != iv.sign_dz) ++bad;
  }
  return bad;
}

double convergence_slope(double c0, double x0, double z0, double t_end,
                         std::span<const double> steps) {
  const ClosedFormTrajectory traj = ClosedFormTrajectory::build(c0, x0, z0);
  const PathPoint exact = traj.evaluate(t_end);
  std::vector<double> lx, ly;
  for (double h : steps) {
    const auto grid = integrate({x0, z0, 0.0}, c0, t_end, {h});
    const ParticleState& last = grid.back();
    const double err = std::max(std::abs(last.x - exact.x), std::abs(last.z - exact.z));
    lx.push_back(std::log10(h));
    ly.push_back(std::log10(err));
  }
  return fit_slope(lx, ly);
}

DriftCheck drift_cross_check(double c0, double x0, double z0, double step) {
  const DriftReport report = measure_drift(c0, x0, z0);
  if (!report.period.has_value())
    throw std::invalid_argument("drift_cross_check: drift undefined outside the Strong regime");
  const auto grid = integrate({x0, z0, 0.0}, c0, *report.period, {step});
  return {*report.displacement, grid.back().x - x0};
}

double bed_velocity_max(double c0, std::size_t samples, unsigned seed) {
  const WaveField field(c0);
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> span(-10.0, 10.0);
  double worst = 0.0;
  for (std::size_t i = 0; i < samples; ++i)
    worst = std::max(worst, std::abs(field.velocity(span(rng), 0.0, span(rng)).v));
  return worst;
}

double surface_condition_gap(double c0, std::size_t samples, unsigned seed) {
  const WaveField field(c0);
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> span(-10.0, 10.0);
  double worst = 0.0;
  for (std::size_t i = 0; i < samples; ++i) {
    const double x = span(rng), t = span(rng);
    worst = std::max(worst,
                     std::abs(field.velocity(x, 1.0, t).v - field.surface_elevation_dt(x, t)));
  }
  return worst;
}

double mean_flow_gap(std::size_t samples, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> span(-5.0, 5.0);
  std::uniform_real_distribution<double> current(-3.0, 3.0);
  double worst = 0.0;
  for (std::size_t i = 0; i < samples; ++i) {
    const double x = span(rng), t = span(rng), c0 = current(rng);
    const WaveField field(c0);
    double integral = 0.0;
    for (int panel = 0; panel < 4; ++panel) {
      const double a = x + 0.25 * panel;
      integral += gauss10(a, a + 0.25,
                          [&](double s) { return field.velocity(s, 0.5, t).u; });
    }
    worst = std::max(worst, std::abs(integral - c0));
  }
  return worst;
}

double wave_equation_order(std::size_t samples, unsigned seed) {
  const WaveField field(0.0);
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> span(-3.0, 3.0);
  std::vector<std::pair<double, double>> points(samples);
  for (auto& p : points) p = {span(rng), span(rng)};

  const double steps[3] = {1e-2, 1e-3, 1e-4};
  std::vector<double> lx, ly;
  for (double h : steps) {
    double worst = 0.0;
    for (const auto& [x, t] : points)
      worst = std::max(worst, wave_equation_residual(field, x, t, h));
    lx.push_back(std::log10(h));
    ly.push_back(std::log10(worst));
  }
  return fit_slope(lx, ly);
}

}  // namespace swwave::verify
