// Timing harness for the two data-parallel kernels: polyline
// self-intersection and the current-strength sweep. Runs each with the
// serial reference and the OpenMP version, checks the outputs match, and
// prints the speedup.

#include <chrono>
#include <cstdio>
#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "swwave/classify.hpp"
#include "swwave/sweep.hpp"

using namespace swwave;
using clock_type = std::chrono::steady_clock;

namespace {

double ms_since(clock_type::time_point start) {
  return std::chrono::duration<double, std::milli>(clock_type::now() - start).count();
}

}  // namespace

int main(int argc, char** argv) {
  std::size_t n = argc > 1 ? static_cast<std::size_t>(std::atol(argv[1])) : 20000;

#ifdef _OPENMP
  std::printf("openmp threads: %d\n", omp_get_max_threads());
#else
  std::printf("openmp not enabled; both columns run the serial code\n");
#endif

  // Looping path with many overlapping loops keeps the pair scan busy.
  const ClosedFormTrajectory traj = ClosedFormTrajectory::build(-0.3, 0.3, 0.1);
  const double period = 1.0 / (0.3 * traj.substitution_ratio());
  const auto pts = sample_path(traj, 0.0, 6.0 * period, n);

  auto t0 = clock_type::now();
  const LoopReport serial = detect_loops_serial(pts);
  const double loops_serial_ms = ms_since(t0);

  t0 = clock_type::now();
  const LoopReport parallel = detect_loops(pts);
  const double loops_parallel_ms = ms_since(t0);

  if (serial.count != parallel.count) {
    std::printf("MISMATCH: serial %zu loops, parallel %zu loops\n", serial.count, parallel.count);
    return 1;
  }
  for (std::size_t i = 0; i < serial.points.size(); ++i) {
    if (serial.points[i].segment_a != parallel.points[i].segment_a ||
        serial.points[i].segment_b != parallel.points[i].segment_b) {
      std::printf("MISMATCH: intersection order differs at %zu\n", i);
      return 1;
    }
  }
  std::printf("loop detection (%zu samples, %zu crossings): serial %8.1f ms, parallel %8.1f ms, speedup %.2fx\n",
              n, serial.count, loops_serial_ms, loops_parallel_ms,
              loops_serial_ms / loops_parallel_ms);

  SweepOptions options;
  options.c0_begin = -3.0;
  options.c0_end = 4.0;
  options.c0_step = 0.05;
  options.samples_per_period = 4000;

  t0 = clock_type::now();
  const auto rows_serial = run_sweep_serial(options);
  const double sweep_serial_ms = ms_since(t0);

  t0 = clock_type::now();
  const auto rows_parallel = run_sweep(options);
  const double sweep_parallel_ms = ms_since(t0);

  for (std::size_t i = 0; i < rows_serial.size(); ++i) {
    if (rows_serial[i].c0 != rows_parallel[i].c0 ||
        rows_serial[i].loop_count != rows_parallel[i].loop_count ||
        rows_serial[i].drift_dx != rows_parallel[i].drift_dx) {
      std::printf("MISMATCH: sweep row %zu differs\n", i);
      return 1;
    }
  }
  std::printf("sweep (%zu rows):                          serial %8.1f ms, parallel %8.1f ms, speedup %.2fx\n",
              rows_serial.size(), sweep_serial_ms, sweep_parallel_ms,
              sweep_serial_ms / sweep_parallel_ms);
  return 0;
}
