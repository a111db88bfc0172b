// Command-line front end: trace particle paths, classify current regimes,
// verify the closed forms against the integrator, and sweep the current
// strength. Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "swwave/classify.hpp"
#include "swwave/io.hpp"
#include "swwave/kinematics.hpp"
#include "swwave/sweep.hpp"
#include "swwave/verify.hpp"

namespace {

using nlohmann::json;
using namespace swwave;

void emit(const std::string& path, const std::string& content) {
  if (path == "-")
    std::fwrite(content.data(), 1, content.size(), stdout);
  else
    io::write_file_atomic(path, content);
}

std::string context_label(double c0, double x0, double z0, bool numeric) {
  std::string label = "particle path  c0=" + io::format_full(c0) + "  x0=" + io::format_full(x0) +
                      "  z0=" + io::format_full(z0);
  if (numeric) label += "  (rk4)";
  return label;
}

struct TraceConfig {
  double c0 = 0.0;
  double x0 = 0.3;
  double z0 = 0.1;
  std::vector<double> window;
  std::size_t samples = 2000;
  double step = 1e-4;
  bool numeric = false;
  std::string format = "csv";
  std::string output = "-";
};

int run_trace(const TraceConfig& config) {
  double t0, t1;
  if (config.window.empty()) {
    const TimeWindow window = default_window(config.c0, config.x0);
    t0 = window.t_begin;
    t1 = window.t_end;
  } else {
    t0 = config.window[0];
    t1 = config.window[1];
  }
  if (!(t0 < t1)) {
    std::cerr << "trace: time window must satisfy t_start < t_end\n";
    return 2;
  }

  std::vector<io::TraceSample> samples;
  if (config.numeric) {
    const auto grid = integrate({config.x0, config.z0, t0}, config.c0, t1, {config.step});
    const std::size_t stride = std::max<std::size_t>(1, grid.size() / config.samples);
    for (std::size_t i = 0; i < grid.size(); i += stride) {
      const ParticleState& s = grid[i];
      const LabRates r = rhs_lab(s, config.c0);
      samples.push_back({s.t, s.x, s.z, r.dx_dt, r.dz_dt});
    }
    if ((grid.size() - 1) % stride != 0) {
      const ParticleState& s = grid.back();
      const LabRates r = rhs_lab(s, config.c0);
      samples.push_back({s.t, s.x, s.z, r.dx_dt, r.dz_dt});
    }
  } else {
    const ClosedFormTrajectory traj = ClosedFormTrajectory::build(config.c0, config.x0, config.z0);
    const double dt = (t1 - t0) / static_cast<double>(config.samples - 1);
    for (std::size_t i = 0; i < config.samples; ++i) {
      const double t = i + 1 == config.samples ? t1 : t0 + static_cast<double>(i) * dt;
      const PathPoint p = traj.evaluate(t);
      const LabRates r = traj.derivatives(t);
      samples.push_back({t, p.x, p.z, r.dx_dt, r.dz_dt});
    }
  }

  if (config.format == "svg")
    emit(config.output,
         io::trace_svg(samples, context_label(config.c0, config.x0, config.z0, config.numeric)));
  else
    emit(config.output, io::trace_csv(samples));
  return 0;
}

int run_classify(double c0, bool as_json, const std::string& output) {
  const RegimeReport report = classify(c0);
  if (as_json) {
    json doc;
    doc["c0"] = c0;
    doc["kind"] = to_string(report.kind);
    doc["degenerate"] = report.degenerate;
    if (report.subcase != ModerateSubcase::None)
      doc["subcase"] = report.subcase == ModerateSubcase::UpToOne ? "0<c0<=1" : "1<c0<=2";
    emit(output, doc.dump(2) + "\n");
  } else {
    emit(output, describe(report) + "\n");
  }
  return 0;
}

struct VerifyCheck {
  std::string name;
  double measured;
  double tolerance;
  bool pass;
};

void add_check(std::vector<VerifyCheck>& checks, const std::string& name, double measured,
               double tolerance) {
  checks.push_back({name, measured, tolerance, measured <= tolerance});
}

int run_verify(const std::vector<double>& currents, double x0, double z0,
               const std::string& json_path) {
  std::vector<VerifyCheck> checks;
  for (double c0 : currents) {
    const std::string tag = " [c0=" + io::format_full(c0) + "]";
    const verify::GapXZ oracle = verify::oracle_gap(c0, x0, z0, 0.0, 3.0, 1e-5);
    add_check(checks, "closed form vs rk4, x" + tag, oracle.x, 1e-6);
    add_check(checks, "closed form vs rk4, z" + tag, oracle.z, 1e-6);

    const verify::ConservationDrift rk = verify::conservation_rk4(c0, x0, z0, 1e-4);
    add_check(checks, "first integral drift, rk4" + tag, rk.max_relative_drift, 1e-9);
    const verify::ConservationDrift cf = verify::conservation_closedform(c0, x0, z0, 3001);
    add_check(checks, "first integral drift, closed form" + tag, cf.max_relative_drift, 1e-10);

    const verify::GapXZ residual = verify::residual_gap(c0, x0, z0, 1000, 20260808u);
    add_check(checks, "path derivative residual, x" + tag, residual.x, 1e-10);
    add_check(checks, "path derivative residual, z" + tag, residual.z, 1e-10);

    add_check(checks, "sign table midpoint agreement" + tag,
              static_cast<double>(verify::sign_table_mismatches(c0, x0)), 0.0);
  }

  bool all_pass = true;
  for (const VerifyCheck& c : checks) {
    all_pass = all_pass && c.pass;
    std::printf("%-55s %10.3e  (tol %.1e)  %s\n", c.name.c_str(), c.measured, c.tolerance,
                c.pass ? "pass" : "FAIL");
  }
  std::printf("verify: %s\n", all_pass ? "all checks passed" : "FAILURES present");

  if (!json_path.empty()) {
    json doc;
    doc["pass"] = all_pass;
    doc["checks"] = json::array();
    for (const VerifyCheck& c : checks)
      doc["checks"].push_back(
          {{"name", c.name}, {"measured", c.measured}, {"tolerance", c.tolerance}, {"pass", c.pass}});
    emit(json_path, doc.dump(2) + "\n");
  }
  return all_pass ? 0 : 1;
}

int run_sweep(const SweepOptions& options, bool serial, const std::string& output) {
  const auto rows = serial ? run_sweep_serial(options) : run_sweep(options);
  emit(output, io::sweep_csv(rows));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"linear shallow-water particle paths: exact solutions, classification, checks"};
  app.require_subcommand(1);

  TraceConfig trace;
  CLI::App* cmd_trace = app.add_subcommand("trace", "sample one particle path to CSV or SVG");
  cmd_trace->set_help_flag("--help", "print help");  // keep -h free for the step size
  cmd_trace->add_option("--c0", trace.c0, "current strength")->required();
  cmd_trace->add_option("--x0", trace.x0, "initial horizontal position");
  cmd_trace->add_option("--z0", trace.z0, "initial height (>= 0)");
  cmd_trace->add_option("--t", trace.window, "time window: t_start t_end")->expected(2);
  cmd_trace->add_option("--n", trace.samples, "sample count")->check(CLI::Range(std::size_t{2}, std::size_t{100000000}));
  cmd_trace->add_option("--h", trace.step, "rk4 step for --numeric")->check(CLI::PositiveNumber);
  cmd_trace->add_flag("--numeric", trace.numeric, "integrate instead of the closed form");
  cmd_trace->add_option("--format", trace.format, "csv or svg")
      ->check(CLI::IsMember({"csv", "svg"}));
  cmd_trace->add_option("-o,--output", trace.output, "output path, - for stdout");

  double classify_c0 = 0.0;
  bool classify_json = false;
  std::string classify_output = "-";
  CLI::App* cmd_classify = app.add_subcommand("classify", "regime of a current strength");
  cmd_classify->add_option("--c0", classify_c0, "current strength")->required();
  cmd_classify->add_flag("--json", classify_json, "emit a JSON report");
  cmd_classify->add_option("-o,--output", classify_output, "output path, - for stdout");

  double verify_c0 = 0.0;
  bool verify_all = false;
  double verify_x0 = 0.3, verify_z0 = 0.1;
  std::string verify_json;
  CLI::App* cmd_verify = app.add_subcommand("verify", "closed form against the integrator");
  CLI::Option* opt_vc0 = cmd_verify->add_option("--c0", verify_c0, "current strength");
  CLI::Option* opt_vall =
      cmd_verify->add_flag("--all", verify_all, "regime-representative grid of currents");
  opt_vc0->excludes(opt_vall);
  cmd_verify->add_option("--x0", verify_x0, "initial horizontal position");
  cmd_verify->add_option("--z0", verify_z0, "initial height (>= 0)");
  cmd_verify->add_option("--json", verify_json, "write a JSON report to this path");

  SweepOptions sweep;
  bool sweep_serial = false;
  std::string sweep_output = "-";
  CLI::App* cmd_sweep = app.add_subcommand("sweep", "tabulate regimes over a c0 range");
  cmd_sweep->add_option("--from", sweep.c0_begin, "first c0");
  cmd_sweep->add_option("--to", sweep.c0_end, "last c0");
  cmd_sweep->add_option("--step", sweep.c0_step, "grid step")->check(CLI::PositiveNumber);
  cmd_sweep->add_option("--x0", sweep.x0, "initial horizontal position");
  cmd_sweep->add_option("--z0", sweep.z0, "initial height");
  cmd_sweep->add_option("--loop-samples", sweep.samples_per_period,
                        "polyline samples per period for loop counting");
  cmd_sweep->add_flag("--serial", sweep_serial, "run the single-threaded engine");
  cmd_sweep->add_option("-o,--output", sweep_output, "output path, - for stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (cmd_trace->parsed()) return run_trace(trace);
    if (cmd_classify->parsed()) return run_classify(classify_c0, classify_json, classify_output);
    if (cmd_verify->parsed()) {
      std::vector<double> currents;
      if (verify_all)
        currents = {-2.0, -1.0, -0.5, 0.0, 0.5, 1.0, 1.5, 2.0, 3.0};
      else if (opt_vc0->count() > 0)
        currents = {verify_c0};
      else {
        std::cerr << "verify: pass --c0 VALUE or --all\n";
        return 2;
      }
      return run_verify(currents, verify_x0, verify_z0, verify_json);
    }
    if (cmd_sweep->parsed()) return run_sweep(sweep, sweep_serial, sweep_output);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
