#include "swwave/classify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace swwave {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

const char* to_string(RegimeKind k) noexcept {
  switch (k) {
    case RegimeKind::UndulatingRight: return "UndulatingRight";
    case RegimeKind::UndulatingLeft: return "UndulatingLeft";
    case RegimeKind::LoopingDriftRight: return "LoopingDriftRight";
    case RegimeKind::SingleLoop: return "SingleLoop";
    case RegimeKind::ParabolicOrSingleLoop: return "ParabolicOrSingleLoop";
  }
  return "?";
}

std::string describe(const RegimeReport& report) {
  std::string out = to_string(report.kind);
  if (report.degenerate) out += " (degenerate boundary)";
  return out;
}

RegimeReport classify(double c0) {
  if (!std::isfinite(c0)) throw std::invalid_argument("classify: c0 must be finite");
  if (c0 > 2.0) return {RegimeKind::UndulatingRight, false, ModerateSubcase::None};
  if (c0 < -1.0) return {RegimeKind::UndulatingLeft, false, ModerateSubcase::None};
  if (c0 < 0.0) return {RegimeKind::LoopingDriftRight, c0 == -1.0, ModerateSubcase::None};
  if (c0 == 0.0) return {RegimeKind::SingleLoop, false, ModerateSubcase::None};
  return {RegimeKind::ParabolicOrSingleLoop, c0 == 2.0,
          c0 <= 1.0 ? ModerateSubcase::UpToOne : ModerateSubcase::AboveOne};
}

namespace {

SignTable equilibrium_table(double c0, double x0) {
  // Matches the equilibrium solution: z is frozen entirely when c0 = 0.
  const double sz = c0 == 0.0 ? 0.0 : std::sin(two_pi * (x0 - std::floor(x0)));
  const int sign_dz = sz > 0.0 ? 1 : sz < 0.0 ? -1 : 0;
  return {{{-kInf, kInf, 1, sign_dz}}, 0.0};
}

SignTable still_table(double k) {
  const double b1 = (-1.0 - k) / two_pi;
  const double b2 = -k / two_pi;
  const double b3 = (1.0 - k) / two_pi;
  return {{{-kInf, b1, 1, -1}, {b1, b2, -1, -1}, {b2, b3, -1, 1}, {b3, kInf, 1, 1}}, 0.0};
}

// Strong regime over one moving-frame period [0, T). Thresholds sit at
// alpha = l pi (z' flips) and, for -1 <= c0 < 0, at alpha = l pi +- alpha*
// with alpha* = arcsin(sqrt((c0^2 - c0) / 2)) (x' flips).
SignTable strong_table(double c0, const ClosedFormTrajectory& traj) {
  const double ratio = traj.substitution_ratio();
  const double rate = -std::numbers::pi * c0 * ratio;
  const double alpha0 = -0.5 * c0 * ratio * traj.integration_constant();
  const double period = 1.0 / (std::abs(c0) * ratio);

  const double x_threshold = (c0 * c0 - c0) / 2.0;  // sin^2 alpha at the x' roots
  const bool x_flips = c0 < 0.0 && x_threshold <= 1.0;
  const double alpha_star = x_flips ? std::asin(std::sqrt(x_threshold)) : 0.0;

  // Collect threshold times inside (0, T).
  std::vector<double> cuts;
  const double a_lo = std::min(alpha0, alpha0 + rate * period);
  const double a_hi = std::max(alpha0, alpha0 + rate * period);
  const long l_min = static_cast<long>(std::floor(a_lo / std::numbers::pi)) - 1;
  const long l_max = static_cast<long>(std::ceil(a_hi / std::numbers::pi)) + 1;
  for (long l = l_min; l <= l_max; ++l) {
    std::vector<double> alphas{static_cast<double>(l) * std::numbers::pi};
    if (x_flips && alpha_star > 0.0 && alpha_star < 0.5 * std::numbers::pi) {
      alphas.push_back(static_cast<double>(l) * std::numbers::pi - alpha_star);
      alphas.push_back(static_cast<double>(l) * std::numbers::pi + alpha_star);
    }
    for (double a : alphas) {
      const double t = (a - alpha0) / rate;
      if (t > 1e-12 && t < period - 1e-12) cuts.push_back(t);
    }
  }
  std::sort(cuts.begin(), cuts.end());

  SignTable table;
  table.period = period;
  double prev = 0.0;
  auto push = [&](double lo, double hi) {
    const double mid_alpha = alpha0 + rate * 0.5 * (lo + hi);
    // Reduce to the offset from the nearest multiple of pi.
    const double r = mid_alpha - std::numbers::pi * std::round(mid_alpha / std::numbers::pi);
    const int sign_dz = r > 0.0 ? 1 : -1;
    int sign_dx;
    if (!x_flips)
      sign_dx = c0 > 2.0 ? 1 : -1;
    else
      sign_dx = std::abs(r) > alpha_star ? 1 : -1;
    table.intervals.push_back({lo, hi, sign_dx, sign_dz});
  };
  for (double c : cuts) {
    push(prev, c);
    prev = c;
  }
  push(prev, period);
  return table;
}

// Moderate and c0 = 2: x' is positive except on the tanh branch with
// 0 < c0 < 1, where it flips at sinh(beta) = +-sqrt((c0 - c0^2)/2).
SignTable hyperbolic_table(double c0, const ClosedFormTrajectory& traj) {
  double rate, u0;
  if (traj.regime() == Regime::CurrentTwo) {
    rate = two_pi;
    u0 = traj.integration_constant();
  } else {
    rate = std::numbers::pi * c0 * traj.substitution_ratio();
    u0 = 0.5 * c0 * traj.substitution_ratio() * traj.integration_constant();
  }
  const double t_mid = -u0 / rate;  // beta (or w) crosses zero here; z' flips

  const double x_threshold = (c0 - c0 * c0) / 2.0;
  const bool x_flips =
      traj.regime() == Regime::Moderate && traj.branch() == PathBranch::Tanh && x_threshold > 0.0;
  if (!x_flips)
    return {{{-kInf, t_mid, 1, -1}, {t_mid, kInf, 1, 1}}, 0.0};

  const double beta_star = std::asinh(std::sqrt(x_threshold));
  const double t1 = (-beta_star - u0) / rate;
  const double t2 = (beta_star - u0) / rate;
  return {{{-kInf, t1, 1, -1}, {t1, t_mid, -1, -1}, {t_mid, t2, -1, 1}, {t2, kInf, 1, 1}}, 0.0};
}

}  // namespace

SignTable sign_table(double c0, double x0) {
  const ClosedFormTrajectory traj = ClosedFormTrajectory::build(c0, x0, 1.0);
  if (traj.branch() == PathBranch::Equilibrium) return equilibrium_table(c0, x0);
  switch (traj.regime()) {
    case Regime::Still:
      return still_table(traj.integration_constant());
    case Regime::Strong:
      return strong_table(c0, traj);
    case Regime::Moderate:
    case Regime::CurrentTwo:
      return hyperbolic_table(c0, traj);
  }
  return {};
}

DriftReport measure_drift(double c0, double x0, double z0) {
  if (!std::isfinite(c0)) throw std::invalid_argument("measure_drift: c0 must be finite");
  DriftReport report;
  if (!(c0 * (c0 - 2.0) > 0.0)) {
    report.status = "moving-frame motion is not periodic for c0 in [0, 2]; no drift period";
    return report;
  }
  const ClosedFormTrajectory traj = ClosedFormTrajectory::build(c0, x0, z0);
  const double ratio = traj.substitution_ratio();
  const double period = 1.0 / (std::abs(c0) * ratio);
  const double dx = traj.evaluate(period).x - traj.evaluate(0.0).x;
  report.period = period;
  report.displacement = dx;
  report.mean_velocity = dx / period;
  report.status = "ok";
  return report;
}

namespace {

struct SegmentBox {
  double xlo, xhi, zlo, zhi;
};

constexpr double kCollinearTol = 1e-12;

int cross_sign(double ox, double oz, double ax, double az, double bx, double bz) {
  const double ux = ax - ox, uz = az - oz;
  const double vx = bx - ox, vz = bz - oz;
  const double cross = ux * vz - uz * vx;
  const double scale = std::sqrt((ux * ux + uz * uz) * (vx * vx + vz * vz));
  if (std::abs(cross) <= kCollinearTol * scale) return 0;
  return cross > 0.0 ? 1 : -1;
}

bool segment_crossing(const PathPoint& p1, const PathPoint& p2, const PathPoint& q1,
                      const PathPoint& q2, Intersection& hit) {
  const int d1 = cross_sign(q1.x, q1.z, q2.x, q2.z, p1.x, p1.z);
  const int d2 = cross_sign(q1.x, q1.z, q2.x, q2.z, p2.x, p2.z);
  const int d3 = cross_sign(p1.x, p1.z, p2.x, p2.z, q1.x, q1.z);
  const int d4 = cross_sign(p1.x, p1.z, p2.x, p2.z, q2.x, q2.z);
  if (d1 * d2 >= 0 || d3 * d4 >= 0) return false;
  const double rx = p2.x - p1.x, rz = p2.z - p1.z;
  const double sx = q2.x - q1.x, sz = q2.z - q1.z;
  const double denom = rx * sz - rz * sx;
  const double s = ((q1.x - p1.x) * sz - (q1.z - p1.z) * sx) / denom;
  hit.x = p1.x + s * rx;
  hit.z = p1.z + s * rz;
  return true;
}

template <typename Body>
LoopReport scan_pairs(std::span<const PathPoint> pts, Body&& body) {
  LoopReport report;
  if (pts.size() < 4) return report;
  const std::size_t nseg = pts.size() - 1;

  std::vector<SegmentBox> boxes(nseg);
  std::vector<char> degenerate(nseg);
  for (std::size_t i = 0; i < nseg; ++i) {
    boxes[i] = {std::min(pts[i].x, pts[i + 1].x), std::max(pts[i].x, pts[i + 1].x),
                std::min(pts[i].z, pts[i + 1].z), std::max(pts[i].z, pts[i + 1].z)};
    degenerate[i] = pts[i].x == pts[i + 1].x && pts[i].z == pts[i + 1].z;
  }
  body(pts, nseg, boxes, degenerate, report);
  std::sort(report.points.begin(), report.points.end(), [](const auto& a, const auto& b) {
    return a.segment_a != b.segment_a ? a.segment_a < b.segment_a : a.segment_b < b.segment_b;
  });
  report.count = report.points.size();
  return report;
}

void scan_row(std::span<const PathPoint> pts, std::size_t i, std::size_t nseg,
              const std::vector<SegmentBox>& boxes, const std::vector<char>& degenerate,
              std::vector<Intersection>& out) {
  if (degenerate[i]) return;
  const SegmentBox bi = boxes[i];
  for (std::size_t j = i + 2; j < nseg; ++j) {
    if (degenerate[j]) continue;
    const SegmentBox& bj = boxes[j];
    if (bj.xlo > bi.xhi || bj.xhi < bi.xlo || bj.zlo > bi.zhi || bj.zhi < bi.zlo) continue;
    Intersection hit{};
    if (segment_crossing(pts[i], pts[i + 1], pts[j], pts[j + 1], hit)) {
      hit.segment_a = i;
      hit.segment_b = j;
      out.push_back(hit);
    }
  }
}

}  // namespace

LoopReport detect_loops_serial(std::span<const PathPoint> polyline) {
  return scan_pairs(polyline, [](std::span<const PathPoint> pts, std::size_t nseg,
                                 const std::vector<SegmentBox>& boxes,
                                 const std::vector<char>& degenerate, LoopReport& report) {
    for (std::size_t i = 0; i + 2 < nseg; ++i)
      scan_row(pts, i, nseg, boxes, degenerate, report.points);
  });
}

LoopReport detect_loops(std::span<const PathPoint> polyline) {
#ifdef _OPENMP
  return scan_pairs(polyline, [](std::span<const PathPoint> pts, std::size_t nseg,
                                 const std::vector<SegmentBox>& boxes,
                                 const std::vector<char>& degenerate, LoopReport& report) {
    std::vector<std::vector<Intersection>> found;
#pragma omp parallel
    {
#pragma omp single
      found.resize(static_cast<std::size_t>(omp_get_num_threads()));
      auto& mine = found[static_cast<std::size_t>(omp_get_thread_num())];
      const long rows = static_cast<long>(nseg) - 2;
#pragma omp for schedule(dynamic, 64)
      for (long i = 0; i < rows; ++i)
        scan_row(pts, static_cast<std::size_t>(i), nseg, boxes, degenerate, mine);
    }
    for (auto& part : found)
      report.points.insert(report.points.end(), part.begin(), part.end());
  });
#else
  return detect_loops_serial(polyline);
#endif
}

std::vector<PathPoint> sample_path(const ClosedFormTrajectory& traj, double t_begin, double t_end,
                                   std::size_t n) {
  if (n < 2) throw std::invalid_argument("sample_path: need at least two samples");
  std::vector<PathPoint> pts(n);
  const double dt = (t_end - t_begin) / static_cast<double>(n - 1);
  for (std::size_t i = 0; i < n; ++i)
    pts[i] = traj.evaluate(i + 1 == n ? t_end : t_begin + static_cast<double>(i) * dt);
  return pts;
}

TimeWindow default_window(double c0, double x0) {
  const ClosedFormTrajectory traj = ClosedFormTrajectory::build(c0, x0, 1.0);
  if (traj.branch() == PathBranch::Equilibrium) return {0.0, 1.0};
  switch (traj.regime()) {
    case Regime::Still: {
      const double k = traj.integration_constant();
      return {(-1.0 - k) / two_pi - 0.75, (1.0 - k) / two_pi + 0.75};
    }
    case Regime::Strong: {
      const double period = 1.0 / (std::abs(c0) * traj.substitution_ratio());
      return {0.0, 2.0 * period};
    }
    case Regime::CurrentTwo: {
      const double k = traj.integration_constant();
      return {(-7.0 - k) / two_pi, (7.0 - k) / two_pi};
    }
    case Regime::Moderate: {
      const double rate = std::numbers::pi * c0 * traj.substitution_ratio();
      const double u0 = 0.5 * c0 * traj.substitution_ratio() * traj.integration_constant();
      double reach = 2.5;
      const double x_threshold = (c0 - c0 * c0) / 2.0;
      if (traj.branch() == PathBranch::Tanh && x_threshold > 0.0)
        reach += std::asinh(std::sqrt(x_threshold));
      return {(-reach - u0) / rate, (reach - u0) / rate};
    }
  }
  return {0.0, 1.0};
}

}  // namespace swwave
