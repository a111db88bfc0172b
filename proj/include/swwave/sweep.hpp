#pragma once

#include <cstddef>
#include <vector>

#include "swwave/classify.hpp"

namespace swwave {

struct SweepOptions {
  double c0_begin = -3.0;
  double c0_end = 4.0;
  double c0_step = 0.25;
  double x0 = 0.3;
  double z0 = 0.1;
  /// Polyline sampling density for the loop count, per moving-frame period
  /// (or per default window when the motion is not periodic).
  std::size_t samples_per_period = 2500;
};

struct SweepRow {
  double c0;
  RegimeReport regime;
  bool has_drift;
  double drift_dx;        // defined in the Strong regime only
  std::size_t loop_count; // self-intersections over the default window
};

/// One row per grid value c0 = begin + i * step, rows independent of each
/// other. The parallel version distributes rows over OpenMP threads and is
/// row-for-row identical to the serial reference.
std::vector<SweepRow> run_sweep(const SweepOptions& options);
std::vector<SweepRow> run_sweep_serial(const SweepOptions& options);

}  // namespace swwave
