#pragma once

#include <span>
#include <string>
#include <vector>

#include "swwave/sweep.hpp"

namespace swwave::io {

/// Shortest decimal form that round-trips a double (17 significant digits).
std::string format_full(double value);

struct TraceSample {
  double t;
  double x;
  double z;
  double dx;
  double dz;
};

/// Header row t,x,z,x_prime,z_prime followed by one row per sample.
std::string trace_csv(std::span<const TraceSample> samples);

/// Header row c0,regime,degenerate,drift_dx,loop_count. The drift column is
/// empty where the motion has no period.
std::string sweep_csv(std::span<const SweepRow> rows);

/// Static SVG 1.1 document with one polyline for the path and annotated
/// axes. Identical input produces byte-identical output.
std::string trace_svg(std::span<const TraceSample> samples, const std::string& title);

/// Write via a temporary file in the same directory followed by a rename,
/// so readers never observe a partially written file.
void write_file_atomic(const std::string& path, const std::string& content);

}  // namespace swwave::io
