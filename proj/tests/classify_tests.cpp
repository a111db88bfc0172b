#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "support/oracles.hpp"
#include "swwave/classify.hpp"
#include "swwave/verify.hpp"

using namespace swwave;

TEST_CASE("regime table") {
  CHECK(classify(3.0).kind == RegimeKind::UndulatingRight);
  CHECK(classify(2.0 + 1e-12).kind == RegimeKind::UndulatingRight);
  CHECK(classify(2.0).kind == RegimeKind::ParabolicOrSingleLoop);
  CHECK(classify(2.0).degenerate);
  CHECK(classify(0.5).kind == RegimeKind::ParabolicOrSingleLoop);
  CHECK(classify(0.5).subcase == ModerateSubcase::UpToOne);
  CHECK(classify(1.5).subcase == ModerateSubcase::AboveOne);
  CHECK(classify(1e-12).kind == RegimeKind::ParabolicOrSingleLoop);
  CHECK(classify(0.0).kind == RegimeKind::SingleLoop);
  CHECK(classify(-1e-12).kind == RegimeKind::LoopingDriftRight);
  CHECK(classify(-0.5).kind == RegimeKind::LoopingDriftRight);
  CHECK(classify(-1.0).kind == RegimeKind::LoopingDriftRight);
  CHECK(classify(-1.0).degenerate);
  CHECK(classify(-1.0 - 1e-12).kind == RegimeKind::UndulatingLeft);
  CHECK(classify(-2.0).kind == RegimeKind::UndulatingLeft);

  CHECK(describe(classify(-1.0)) == "LoopingDriftRight (degenerate boundary)");
  CHECK(describe(classify(3.0)) == "UndulatingRight");

  CHECK_THROWS_AS(classify(std::nan("")), std::invalid_argument);
  CHECK_THROWS_AS(classify(std::numeric_limits<double>::infinity()), std::invalid_argument);
}

namespace {

enum class Pattern { AllPositive, AllNegative, Mixed };

Pattern horizontal_pattern(double c0, double x0) {
  const ClosedFormTrajectory traj = ClosedFormTrajectory::build(c0, x0, 0.1);
  const TimeWindow window = default_window(c0, x0);
  bool pos = false, neg = false;
  for (int i = 0; i <= 200; ++i) {
    const double t = window.t_begin + (window.t_end - window.t_begin) * i / 200;
    const double dx = traj.derivatives(t).dx_dt;
    pos = pos || dx > 1e-12;
    neg = neg || dx < -1e-12;
  }
  return pos && neg ? Pattern::Mixed : pos ? Pattern::AllPositive : Pattern::AllNegative;
}

}  // namespace

TEST_CASE("classification agrees with the measured derivative structure") {
  for (int i = 0; i < 100; ++i) {
    const double c0 = 2.02 + 3.98 * i / 99;
    CHECK(classify(c0).kind == RegimeKind::UndulatingRight);
    CHECK(horizontal_pattern(c0, 0.3) == Pattern::AllPositive);
  }
  for (int i = 0; i < 100; ++i) {
    const double c0 = -5.0 + 3.98 * i / 99;
    CHECK(classify(c0).kind == RegimeKind::UndulatingLeft);
    CHECK(horizontal_pattern(c0, 0.3) == Pattern::AllNegative);
  }
  for (int i = 0; i < 100; ++i) {
    const double c0 = -0.98 + 0.96 * i / 99;
    CHECK(classify(c0).kind == RegimeKind::LoopingDriftRight);
    CHECK(horizontal_pattern(c0, 0.3) == Pattern::Mixed);
  }
  CHECK(horizontal_pattern(0.0, 0.3) == Pattern::Mixed);
  for (int i = 0; i < 100; ++i) {
    const double c0 = 0.02 + 1.96 * i / 99;
    const RegimeReport report = classify(c0);
    CHECK(report.kind == RegimeKind::ParabolicOrSingleLoop);
    for (double x0 : {0.3, 0.45}) {
      const ClosedFormTrajectory traj = ClosedFormTrajectory::build(c0, x0, 0.1);
      const Pattern pattern = horizontal_pattern(c0, x0);
      if (traj.branch() == PathBranch::Coth || report.subcase == ModerateSubcase::AboveOne)
        CHECK(pattern == Pattern::AllPositive);  // parabolic-like
      else if (traj.branch() == PathBranch::Tanh && c0 < 1.0)
        CHECK(pattern == Pattern::Mixed);  // one loop
    }
  }
}

TEST_CASE("sign tables match the analytic derivatives at probe points") {
  for (double c0 : {-2.0, -1.0, -0.5, 0.0, 0.5, 1.0, 1.5, 2.0, 3.0})
    for (double x0 : {0.3, 0.45, 0.25}) {
      CAPTURE(c0);
      CAPTURE(x0);
      CHECK(verify::sign_table_mismatches(c0, x0) == 0);
    }
  // rest points
  CHECK(verify::sign_table_mismatches(0.0, 1.0) == 0);
  CHECK(verify::sign_table_mismatches(1.0, 0.25) == 0);
  CHECK(verify::sign_table_mismatches(2.0, 0.5) == 0);
}

TEST_CASE("still-water sign table") {
  const SignTable table = sign_table(0.0, 0.5);  // integration constant ~ 0
  REQUIRE(table.intervals.size() == 4);
  CHECK(table.period == 0.0);
  CHECK(table.intervals[0].t_end == doctest::Approx(-1.0 / two_pi).epsilon(1e-12));
  CHECK(std::abs(table.intervals[1].t_end) < 1e-12);
  CHECK(table.intervals[2].t_end == doctest::Approx(1.0 / two_pi).epsilon(1e-12));
  const int want_dx[4] = {1, -1, -1, 1};
  const int want_dz[4] = {-1, -1, 1, 1};
  for (int i = 0; i < 4; ++i) {
    CHECK(table.intervals[i].sign_dx == want_dx[i]);
    CHECK(table.intervals[i].sign_dz == want_dz[i]);
  }
}

TEST_CASE("strong-regime sign table") {
  SUBCASE("left undulation: x' negative throughout, z' alternates") {
    const SignTable table = sign_table(-2.0, 0.3);
    CHECK(table.period == doctest::Approx(1.0 / std::sqrt(8.0)).epsilon(1e-12));
    REQUIRE(table.intervals.size() >= 2);
    for (const SignInterval& iv : table.intervals) CHECK(iv.sign_dx == -1);
    for (std::size_t i = 1; i < table.intervals.size(); ++i)
      CHECK(table.intervals[i].sign_dz == -table.intervals[i - 1].sign_dz);
  }
  SUBCASE("looping band has four sign phases per period") {
    const SignTable table = sign_table(-0.5, 0.3);
    std::size_t flips = 0;
    for (std::size_t i = 1; i < table.intervals.size(); ++i)
      if (table.intervals[i].sign_dx != table.intervals[i - 1].sign_dx) ++flips;
    CHECK(flips >= 1);
    CHECK(table.intervals.size() >= 3);
  }
}

TEST_CASE("moderate sign tables") {
  SUBCASE("upper band, tanh branch: forward motion with one height minimum") {
    const SignTable table = sign_table(1.5, 0.4);
    REQUIRE(table.intervals.size() == 2);
    CHECK(table.intervals[0].sign_dx == 1);
    CHECK(table.intervals[1].sign_dx == 1);
    CHECK(table.intervals[0].sign_dz == -1);
    CHECK(table.intervals[1].sign_dz == 1);
  }
  SUBCASE("lower band, tanh branch: four phases bounded by the sinh thresholds") {
    const SignTable table = sign_table(0.5, 0.3);
    REQUIRE(table.intervals.size() == 4);
    const int want_dx[4] = {1, -1, -1, 1};
    const int want_dz[4] = {-1, -1, 1, 1};
    for (int i = 0; i < 4; ++i) {
      CHECK(table.intervals[i].sign_dx == want_dx[i]);
      CHECK(table.intervals[i].sign_dz == want_dz[i]);
    }
  }
}

TEST_CASE("per-period drift") {
  SUBCASE("frozen values") {
    const DriftReport left = measure_drift(-2.0, 0.3, 0.1);
    REQUIRE(left.period.has_value());
    CHECK(*left.period == doctest::Approx(0.35355339059327373).epsilon(1e-12));
    CHECK(*left.displacement == doctest::Approx(-0.6464466094067263).epsilon(1e-12));

    const DriftReport right = measure_drift(3.0, 0.3, 0.1);
    CHECK(*right.period == doctest::Approx(0.5773502691896258).epsilon(1e-12));
    CHECK(*right.displacement == doctest::Approx(1.5773502691896257).epsilon(1e-12));

    const DriftReport adverse = measure_drift(-0.5, 0.3, 0.1);
    CHECK(*adverse.displacement == doctest::Approx(-0.10557280900008414).epsilon(1e-10));
  }
  SUBCASE("weak adverse currents do drift forward") {
    const DriftReport report = measure_drift(-0.25, 0.3, 0.1);
    CHECK(*report.displacement > 0.0);
    CHECK(*report.displacement == doctest::Approx(1.0 / 0.75 - 1.0).epsilon(1e-12));
  }
  SUBCASE("displacement does not depend on the anchor time or start height") {
    const DriftReport a = measure_drift(-0.5, 0.3, 0.1);
    const DriftReport b = measure_drift(-0.5, 0.85, 7.0);
    CHECK(*a.displacement == doctest::Approx(*b.displacement).epsilon(1e-10));
  }
  SUBCASE("matches the integrator over one period") {
    for (double c0 : {-2.0, -1.0, -0.5, 2.5, 3.0}) {
      const verify::DriftCheck check = verify::drift_cross_check(c0, 0.3, 0.1, 1e-5);
      CAPTURE(c0);
      CHECK(std::abs(check.closed_form - check.integrator) <= 1e-6);
    }
  }
  SUBCASE("undefined outside the periodic regime") {
    const DriftReport report = measure_drift(0.5, 0.3, 0.1);
    CHECK(!report.period.has_value());
    CHECK(!report.displacement.has_value());
    CHECK(!report.status.empty());
  }
}

TEST_CASE("loop detection") {
  SUBCASE("straight line has no crossings") {
    std::vector<PathPoint> line;
    for (int i = 0; i <= 100; ++i) line.push_back({0.01 * i, 0.02 * i});
    CHECK(detect_loops(line).count == 0);
  }
  SUBCASE("explicit bowtie crosses once") {
    const std::vector<PathPoint> bow = {{0.0, 0.0}, {1.0, 1.0}, {1.0, 0.0}, {0.0, 1.0}};
    const LoopReport report = detect_loops(bow);
    REQUIRE(report.count == 1);
    CHECK(report.points[0].x == doctest::Approx(0.5));
    CHECK(report.points[0].z == doctest::Approx(0.5));
  }
  SUBCASE("repeated points are skipped, not counted") {
    const std::vector<PathPoint> degen = {{0.0, 0.0}, {1.0, 1.0}, {1.0, 1.0}, {2.0, 0.0},
                                          {2.0, 0.0}, {3.0, 1.0}};
    CHECK(detect_loops(degen).count == 0);
  }
  SUBCASE("single loop of the still-water path") {
    const ClosedFormTrajectory traj = ClosedFormTrajectory::build(0.0, 0.3, 0.1);
    const auto pts = sample_path(traj, -3.0, 3.0, 6001);
    const LoopReport report = detect_loops(pts);
    REQUIRE(report.count == 1);

    // Independent location: the curve is symmetric about x = 1/2 - k/(2 pi);
    // the crossing time offset s solves atan(2 pi s) = pi s.
    const double k = traj.integration_constant();
    const double s = oracles::bisect(0.1, 0.49, [](double v) {
      return std::atan(two_pi * v) - std::numbers::pi * v;
    });
    const double x_cross = 0.5 - k / two_pi;
    const double z_cross = 0.1 * (1.0 + two_pi * s * two_pi * s) / (1.0 + k * k);
    CHECK(std::abs(report.points[0].x - x_cross) < 1e-4);
    CHECK(std::abs(report.points[0].z - z_cross) < 1e-4);
  }
  SUBCASE("undulating paths never cross themselves") {
    for (double c0 : {3.0, -2.0}) {
      const ClosedFormTrajectory traj = ClosedFormTrajectory::build(c0, 0.3, 0.1);
      const auto pts = sample_path(traj, 0.0, 3.0, 10000);
      CHECK(detect_loops(pts).count == 0);
    }
  }
  SUBCASE("parallel scan equals the serial reference") {
    const ClosedFormTrajectory traj = ClosedFormTrajectory::build(-0.3, 0.3, 0.1);
    const double period = 1.0 / (0.3 * traj.substitution_ratio());
    const auto pts = sample_path(traj, 0.0, 6.0 * period, 6000);
    const LoopReport serial = detect_loops_serial(pts);
    const LoopReport parallel = detect_loops(pts);
    REQUIRE(serial.count == parallel.count);
    for (std::size_t i = 0; i < serial.count; ++i) {
      CHECK(serial.points[i].segment_a == parallel.points[i].segment_a);
      CHECK(serial.points[i].segment_b == parallel.points[i].segment_b);
      CHECK(serial.points[i].x == parallel.points[i].x);
    }

    std::mt19937 rng(37);
    std::normal_distribution<double> step(0.0, 1.0);
    std::vector<PathPoint> walk{{0.0, 0.0}};
    for (int i = 0; i < 400; ++i)
      walk.push_back({walk.back().x + step(rng), walk.back().z + step(rng)});
    CHECK(detect_loops_serial(walk).count == detect_loops(walk).count);
  }
}

TEST_CASE("default windows are ordered") {
  for (double c0 : {-2.0, -1.0, -0.5, 0.0, 0.5, 1.0, 1.5, 2.0, 3.0})
    for (double x0 : {0.25, 0.3, 0.45, 1.0}) {
      const TimeWindow window = default_window(c0, x0);
      CHECK(window.t_begin < window.t_end);
    }
}
