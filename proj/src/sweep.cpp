#include "swwave/sweep.hpp"

#include <cmath>
#include <stdexcept>

namespace swwave {

namespace {

std::size_t grid_size(const SweepOptions& options) {
  if (!(options.c0_step > 0.0)) throw std::invalid_argument("sweep: step must be positive");
  if (!(options.c0_end >= options.c0_begin) || !std::isfinite(options.c0_begin) ||
      !std::isfinite(options.c0_end))
    throw std::invalid_argument("sweep: empty or non-finite range");
  return static_cast<std::size_t>(
             std::floor((options.c0_end - options.c0_begin) / options.c0_step + 1e-9)) +
         1;
}

SweepRow make_row(const SweepOptions& options, std::size_t index, bool parallel_scan) {
  SweepRow row{};
  row.c0 = options.c0_begin + static_cast<double>(index) * options.c0_step;
  row.regime = classify(row.c0);

  const DriftReport drift = measure_drift(row.c0, options.x0, options.z0);
  row.has_drift = drift.displacement.has_value();
  row.drift_dx = row.has_drift ? *drift.displacement : 0.0;

  const ClosedFormTrajectory traj = ClosedFormTrajectory::build(row.c0, options.x0, options.z0);
  const TimeWindow window = default_window(row.c0, options.x0);
  std::size_t samples = options.samples_per_period;
  if (traj.regime() == Regime::Strong) {
    const double period = 1.0 / (std::abs(row.c0) * traj.substitution_ratio());
    const double periods = (window.t_end - window.t_begin) / period;
    samples = static_cast<std::size_t>(std::ceil(periods * static_cast<double>(samples)));
  }
  const auto pts = sample_path(traj, window.t_begin, window.t_end, std::max<std::size_t>(samples, 2));
  row.loop_count = (parallel_scan ? detect_loops(pts) : detect_loops_serial(pts)).count;
  return row;
}

}  // namespace

std::vector<SweepRow> run_sweep_serial(const SweepOptions& options) {
  const std::size_t n = grid_size(options);
  std::vector<SweepRow> rows(n);
  for (std::size_t i = 0; i < n; ++i) rows[i] = make_row(options, i, false);
  return rows;
}

std::vector<SweepRow> run_sweep(const SweepOptions& options) {
  const std::size_t n = grid_size(options);
  std::vector<SweepRow> rows(n);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (long i = 0; i < static_cast<long>(n); ++i)
    rows[static_cast<std::size_t>(i)] = make_row(options, static_cast<std::size_t>(i), true);
  return rows;
}

}  // namespace swwave
