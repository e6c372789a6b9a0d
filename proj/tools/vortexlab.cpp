// vortexlab: command-line front end for the finite-difference vortex lab.
//
// Exit status: 0 success, 1 verification failure or other runtime error,
// 2 usage or config error, 3 numerical blow-up, 4 I/O or file-format error.

#include <algorithm>
#include <array>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <limits>
#include <numbers>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "CLI11.hpp"
#include "verify_suite.hpp"
#include "vtx/config.hpp"
#include "vtx/convergence.hpp"
#include "vtx/driver.hpp"
#include "vtx/entropy.hpp"
#include "vtx/experiments.hpp"
#include "vtx/series.hpp"
#include "vtx/snapshot.hpp"
#include "vtx/wyf.hpp"
#include "vtx/zk.hpp"

namespace fs = std::filesystem;
using namespace vtx;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBlowUp = 3;
constexpr int kExitIo = 4;

// RK4 keeps a purely imaginary eigenvalue stable up to |lambda| dt = 2 sqrt(2).
constexpr double kRk4ImaginaryLimit = 2.0 * std::numbers::sqrt2;

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return parse_config(ss.str());
  } catch (const ConfigError& e) {
    throw ConfigError(e.line(), path + ": " + e.what());
  }
}

void warn_if_unstable(const RunConfig& c) {
  if (c.integrator.scheme != Scheme::rk4) return;
  const double bound = linear_frequency_bound(make_run_grid(c), c.shear, c.model);
  if (bound * c.integrator.dt > kRk4ImaginaryLimit) {
    std::cerr << "warning: |lambda| dt = " << bound * c.integrator.dt << " exceeds the RK4 limit "
              << kRk4ImaginaryLimit << "; expect blow-up (try integrator.dt <= " << kRk4ImaginaryLimit / bound
              << ")\n";
  }
}

std::vector<double> parse_list(const std::string& s) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::logic_error&) {
      used = 0;
    }
    if (used == 0 || item.find_first_not_of(" \t", used) != std::string::npos) {
      throw CLI::ValidationError("--f1", "not a number: '" + item + "'");
    }
    out.push_back(v);
  }
  if (out.empty()) throw CLI::ValidationError("--f1", "empty list");
  return out;
}

std::string f1_label(double f1) {
  std::ostringstream os;
  os << f1;
  return os.str();
}

int report_run(const RunConfig& c, const RunOutcome& out) {
  const auto& s = out.series;
  std::cout << c.output.label << ": " << s.size() << " records";
  if (!s.empty()) std::cout << ", T=" << s.back().time << ", peak=" << s.back().peak_value;
  if (!out.directory.empty()) std::cout << ", output in " << out.directory.string();
  std::cout << '\n';
  if (out.result.blow_up) {
    std::cerr << c.output.label << ": blow-up: " << out.result.blow_up->describe() << '\n';
    return kExitBlowUp;
  }
  return kExitOk;
}

int cmd_zk_profile(double c, double r_max, double dr, double tol, const std::string& out) {
  RadialSolveOptions o;
  o.r_max = r_max;
  o.dr = dr;
  o.tol = tol;
  const RadialProfile p = solve_radial(c, o);
  write_profile_csv(out, p);
  std::cout << "c=" << c << " phi(0)=" << std::setprecision(17) << p.values.front() << " r_max=" << p.r_max
            << " points=" << p.values.size() << " -> " << out << '\n';
  return kExitOk;
}

int cmd_run(const std::string& config_path, bool emit_eta, int workers) {
  RunConfig c = load_config(config_path);
  if (emit_eta) c.output.emit_eta = true;
  if (workers > 0) c.workers = workers;
  warn_if_unstable(c);
  return report_run(c, execute_run(c));
}

int cmd_sweep(const std::string& config_path, const std::string& f1_list, double t_end, int workers) {
  RunConfig base = load_config(config_path);
  if (t_end > 0) base.integrator.t_end = t_end;
  if (workers > 0) base.workers = workers;
  const std::vector<double> values = parse_list(f1_list);
  // One initial state for every member of the sweep.
  RunOptions opts;
  opts.initial = make_initial_field(base);
  int status = kExitOk;
  for (double f1 : values) {
    RunConfig c = base;
    c.shear.f1 = f1;
    c.output.label = base.output.label + "_f1_" + f1_label(f1);
    validate_config(c);
    warn_if_unstable(c);
    status = std::max(status, report_run(c, execute_run(c, opts)));
  }
  return status;
}

int cmd_entropy(const std::string& dir, const std::string& slice, const std::string& out_path, double f1) {
  CESpec spec;
  const fs::path cfg_path = fs::path(dir) / "run.cfg";
  if (fs::exists(cfg_path)) {
    const RunConfig rc = load_config(cfg_path.string());
    spec = rc.ce;
    if (std::isnan(f1)) f1 = rc.shear.f1;
  }
  if (!slice.empty()) {
    const CESpec s = parse_slice_rule(slice);
    spec.slice_rule = s.slice_rule;
    spec.y = s.y;
  }
  std::vector<fs::path> files;
  std::error_code ec;
  for (const auto& e : fs::directory_iterator(dir, ec)) {
    const std::string name = e.path().filename().string();
    if (name.starts_with("snap_") && name.ends_with(".vtx") && !name.ends_with("_eta.vtx")) files.push_back(e.path());
  }
  if (ec) throw IoError("cannot list " + dir + ": " + ec.message());
  if (files.empty()) throw IoError("no snap_*.vtx files in " + dir);
  std::sort(files.begin(), files.end());

  std::vector<CeRow> rows;
  for (const auto& f : files) {
    const Snapshot s = read_snapshot(f);
    const auto ce = ce_of_state(s.field, spec);
    rows.push_back({f1, s.header.time, ce.value_or(std::numeric_limits<double>::quiet_NaN())});
  }
  if (out_path.empty() || out_path == "-") {
    write_ce_csv(std::cout, rows);
  } else {
    std::ofstream os(out_path);
    if (!os) throw IoError("cannot open " + out_path);
    write_ce_csv(os, rows);
    if (!os) throw IoError("failed writing " + out_path);
    std::cout << rows.size() << " rows -> " << out_path << '\n';
  }
  return kExitOk;
}

int cmd_convergence(bool with_time) {
  const std::vector<int> levels{100, 200, 400};
  std::cout << "stencil orders on sin(2 pi x / lx) cos(pi y / ly), nx = 100, 200, 400\n";
  for (const auto& s : stencil_convergence(levels)) {
    std::cout << "  " << std::left << std::setw(11) << s.name << " order " << std::fixed << std::setprecision(3)
              << s.order << "   max errors";
    std::cout << std::scientific << std::setprecision(3);
    for (double e : s.max_error) std::cout << ' ' << e;
    std::cout << std::defaultfloat << '\n';
  }
  if (!with_time) return kExitOk;
  std::cout << "time-step refinement, c=1 ZK deposit, zk_limit, 100 x 50 grid, T=0.2\n";
  const double filter = IntegratorConfig{}.asselin;
  const std::array<std::tuple<Scheme, double, const char*>, 3> cases{
      {{Scheme::rk4, 0.0, "rk4                  "},
       {Scheme::leapfrog, 0.0, "leapfrog, unfiltered "},
       {Scheme::leapfrog, filter, "leapfrog, asselin    "}}};
  for (const auto& [sc, nu, name] : cases) {
    const TimeStudy t = time_convergence(sc, 4e-4, 0.2, 4, nu);
    std::cout << "  " << name << " successive-difference ratios";
    for (double r : t.ratios) std::cout << ' ' << std::setprecision(4) << r;
    std::cout << '\n';
  }
  return kExitOk;
}

int cmd_verify(const std::string& preset_name, bool extended, const std::vector<std::string>& only,
               const std::string& golden, const std::string& verdicts_out) {
  auto progress = [](const std::string& s) { std::cerr << "  " << s << '\n'; };
  if (!preset_name.empty()) {
    const ExperimentPreset p = preset(preset_name);
    std::cerr << p.name << ": " << p.description << '\n';
    const auto verdicts = evaluate_preset(p, progress);
    if (verdicts_out.empty()) {
      write_verdicts_csv(std::cout, verdicts);
    } else {
      std::ofstream os(verdicts_out);
      if (!os) throw IoError("cannot open " + verdicts_out);
      write_verdicts_csv(os, verdicts);
    }
    const bool ok = std::all_of(verdicts.begin(), verdicts.end(), [](const Verdict& v) { return v.pass; });
    return ok ? kExitOk : kExitVerifyFailed;
  }
  verify::SuiteOptions o;
  o.extended = extended;
  o.only = only;
  o.golden_snapshot = golden;
  o.log = progress;
  o.on_outcome = [](const verify::Outcome& r) { std::cout << verify::format_outcome(r) << std::endl; };
  const auto outcomes = verify::run_acceptance(o);
  bool ok = !outcomes.empty();
  for (const auto& r : outcomes) ok = ok && (r.pass || r.skipped);
  return ok ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite-difference lab for sheared drift-wave vortices and the ZK equation"};
  app.require_subcommand(1);

  auto* zk = app.add_subcommand("zk-profile", "solve the radial ZK profile and save it as CSV");
  double c = 1.0, r_max = 0.0, dr = 1e-3, tol = 1e-12;
  std::string profile_out;
  zk->add_option("--c", c, "wave speed")->required()->check(CLI::PositiveNumber);
  zk->add_option("--r-max", r_max, "integration radius (0 selects 30/sqrt(c))")->check(CLI::NonNegativeNumber);
  zk->add_option("--dr", dr, "radial step")->check(CLI::PositiveNumber);
  zk->add_option("--tol", tol, "bisection tolerance on phi(0)")->check(CLI::PositiveNumber);
  zk->add_option("--out", profile_out, "output CSV")->required();

  auto* run = app.add_subcommand("run", "evolve one configuration");
  std::string config_path;
  bool emit_eta = false;
  int workers = 0;
  run->add_option("--config", config_path, "key = value config file")->required();
  run->add_flag("--emit-eta", emit_eta, "also store eta snapshots");
  run->add_option("--workers", workers, "threads per RHS evaluation")->check(CLI::Range(1, 256));

  auto* sweep = app.add_subcommand("sweep", "shear sweep from one initial state");
  std::string f1_list;
  double t_end = 0.0;
  sweep->add_option("--config", config_path, "base config file")->required();
  sweep->add_option("--f1", f1_list, "comma-separated shear values")->required();
  sweep->add_option("--t-end", t_end, "override integrator.t_end")->check(CLI::PositiveNumber);
  sweep->add_option("--workers", workers, "threads per RHS evaluation")->check(CLI::Range(1, 256));

  auto* entropy = app.add_subcommand("entropy", "configurational entropy of a snapshot directory");
  std::string snap_dir, slice, ce_out;
  double ce_f1 = std::numeric_limits<double>::quiet_NaN();
  entropy->add_option("--snapshots", snap_dir, "run directory with snap_*.vtx")->required()->check(CLI::ExistingDirectory);
  entropy->add_option("--slice", slice, "through-peak or y=<value>");
  entropy->add_option("--out", ce_out, "CE CSV (default stdout)");
  entropy->add_option("--f1", ce_f1, "f1 column value when the directory has no run.cfg");

  auto* conv = app.add_subcommand("convergence", "stencil and time-step refinement study");
  bool stencil_only = false;
  conv->add_flag("--stencil-only", stencil_only, "skip the time-step study");

  auto* verify = app.add_subcommand("verify", "acceptance suite or one experiment preset");
  std::string preset_name, golden, verdicts_out;
  bool extended = false;
  std::vector<std::string> only;
  verify->add_option("--preset", preset_name, "run one preset and print its verdicts CSV");
  verify->add_flag("--extended", extended, "include the nine-run CE scan");
  verify->add_option("--only", only, "criteria to run, e.g. A1,A4")->delimiter(',');
  verify->add_option("--golden", golden, "committed golden snapshot to compare against");
  verify->add_option("--verdicts", verdicts_out, "write the preset verdicts CSV here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*zk) return cmd_zk_profile(c, r_max, dr, tol, profile_out);
    if (*run) return cmd_run(config_path, emit_eta, workers);
    if (*sweep) return cmd_sweep(config_path, f1_list, t_end, workers);
    if (*entropy) return cmd_entropy(snap_dir, slice, ce_out, ce_f1);
    if (*conv) return cmd_convergence(!stencil_only);
    if (*verify) return cmd_verify(preset_name, extended, only, golden, verdicts_out);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const BlowUpError& e) {
    std::cerr << "blow-up: " << e.what() << '\n';
    return kExitBlowUp;
  } catch (const IoError& e) {
    std::cerr << "I/O error: " << e.what() << '\n';
    return kExitIo;
  } catch (const FormatError& e) {
    std::cerr << "format error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}
