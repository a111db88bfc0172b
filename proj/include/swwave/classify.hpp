#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "swwave/closedform.hpp"

namespace swwave {

/// Path taxonomy by current strength:
///   c0 > 2        UndulatingRight
///   c0 < -1       UndulatingLeft
///   -1 <= c0 < 0  LoopingDriftRight
///   c0 = 0        SingleLoop
///   0 < c0 <= 2   ParabolicOrSingleLoop
enum class RegimeKind {
  UndulatingRight,
  UndulatingLeft,
  LoopingDriftRight,
  SingleLoop,
  ParabolicOrSingleLoop,
};

/// Finer split of the 0 < c0 <= 2 band: the derivative analysis differs for
/// 0 < c0 <= 1 and 1 < c0 <= 2.
enum class ModerateSubcase { None, UpToOne, AboveOne };

struct RegimeReport {
  RegimeKind kind;
  /// Set at the interval endpoints c0 = -1 and c0 = 2 where the derivative
  /// analysis degenerates (isolated zeros of x', collapsing substitution).
  bool degenerate;
  ModerateSubcase subcase;
};

const char* to_string(RegimeKind k) noexcept;
std::string describe(const RegimeReport& report);

/// Pure function of c0. Throws std::invalid_argument on non-finite input.
RegimeReport classify(double c0);

/// One maximal time interval with constant derivative signs. Unbounded ends
/// carry +-infinity.
struct SignInterval {
  double t_begin;
  double t_end;
  int sign_dx;  // -1, 0 or +1
  int sign_dz;
};

/// Sign decomposition of (x'(t), z'(t)) along the trajectory started at x0
/// (heights scale out; signs assume z0 > 0). Aperiodic regimes cover the
/// whole line; the Strong regime covers one moving-frame period starting at
/// t = 0 and reports its length.
struct SignTable {
  std::vector<SignInterval> intervals;
  double period;  // 0 when the pattern does not repeat
};

SignTable sign_table(double c0, double x0);

/// Net horizontal displacement over one moving-frame period. Defined for the
/// Strong regime only, where the moving-frame motion is periodic with
/// T = 1 / (|c0| sqrt((c0-2)/c0)).
struct DriftReport {
  std::optional<double> period;
  std::optional<double> displacement;    // x(t0 + T) - x(t0)
  std::optional<double> mean_velocity;   // displacement / period
  std::string status;
};

DriftReport measure_drift(double c0, double x0, double z0);

struct Intersection {
  double x;
  double z;
  std::size_t segment_a;
  std::size_t segment_b;
};

struct LoopReport {
  std::size_t count = 0;
  std::vector<Intersection> points;
};

/// Transversal self-intersections of the sampled polyline. Adjacent and
/// zero-length segments are skipped; near-collinear crossings (relative
/// cross product below 1e-12) do not count. The parallel version runs the
/// pair scan with OpenMP when available and returns results identical to
/// the serial reference.
LoopReport detect_loops(std::span<const PathPoint> polyline);
LoopReport detect_loops_serial(std::span<const PathPoint> polyline);

/// Sample the closed-form path at n uniform times in [t_begin, t_end].
std::vector<PathPoint> sample_path(const ClosedFormTrajectory& traj, double t_begin,
                                   double t_end, std::size_t n);

/// Plotting window covering the interesting part of the path: two periods in
/// the Strong regime, the full sign-change window elsewhere.
struct TimeWindow {
  double t_begin;
  double t_end;
};

TimeWindow default_window(double c0, double x0);

}  // namespace swwave
