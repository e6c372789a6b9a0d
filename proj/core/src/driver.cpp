#include "vtx/driver.hpp"

#include <cstdio>
#include <fstream>
#include <memory>
#include <sstream>

#include "vtx/series.hpp"
#include "vtx/snapshot.hpp"

namespace vtx {
namespace {

RadialProfile profile_for(const RunConfig& config, double c) {
  if (!config.init.profile.empty()) return read_profile_csv(config.init.profile, c);
  return solve_radial(c);
}

}  // namespace

void write_profile_csv(const std::filesystem::path& path, const RadialProfile& profile) {
  std::ofstream os(path);
  if (!os) throw IoError("cannot open " + path.string() + " for writing");
  os << "r,phi\n";
  for (std::size_t k = 0; k < profile.values.size(); ++k) {
    os << format_float(static_cast<double>(k) * profile.dr) << ',' << format_float(profile.values[k]) << '\n';
  }
  if (!os) throw IoError("failed writing " + path.string());
}

RadialProfile read_profile_csv(const std::filesystem::path& path, double c) {
  std::ifstream is(path);
  if (!is) throw IoError("cannot open " + path.string());
  std::string line;
  if (!std::getline(is, line) || line != "r,phi") throw std::runtime_error(path.string() + ": expected header r,phi");
  std::vector<double> r, phi;
  int line_no = 1;
  while (std::getline(is, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) throw std::runtime_error(path.string() + ":" + std::to_string(line_no) + ": expected r,phi");
    try {
      r.push_back(std::stod(line.substr(0, comma)));
      phi.push_back(std::stod(line.substr(comma + 1)));
    } catch (const std::logic_error&) {
      throw std::runtime_error(path.string() + ":" + std::to_string(line_no) + ": bad number");
    }
  }
  return profile_from_table(c, r, phi);
}

Field2D make_initial_field(const RunConfig& config) {
  validate_config(config);
  const Grid2D grid = make_run_grid(config);
  const InitConfig& in = config.init;
  Field2D xi(grid);
  switch (in.kind) {
    case InitKind::gaussian:
      xi = sample_gaussian(grid, in.amplitude, in.x0[0], in.y0[0]);
      break;
    case InitKind::zk:
      xi = deposit_radial(grid, profile_for(config, in.c[0]), in.x0[0], in.y0[0]);
      break;
    case InitKind::two_zk:
      xi = deposit_radial(grid, solve_radial(in.c[0]), in.x0[0], in.y0[0]);
      xi += deposit_radial(grid, solve_radial(in.c[1]), in.x0[1], in.y0[1]);
      break;
    case InitKind::plane:
      xi = plane_soliton_field(grid, PlaneSoliton{in.c[0], in.theta}, 0.0);
      break;
  }
  if (in.field == InitField::eta) {
    for (int j = 0; j < grid.rows(); ++j) {
      const double ramp = config.shear.ramp(grid.y(j));
      double* row = xi.row(j);
      for (int i = 0; i < grid.nx(); ++i) row[i] += ramp;
    }
  }
  xi.apply_boundary();
  return xi;
}

std::string snapshot_name(long step, FieldId id) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "snap_%09ld%s.vtx", step, id == FieldId::eta ? "_eta" : "");
  return buf;
}

RhsFn make_rhs_fn(const RunConfig& config, const Grid2D& grid) {
  auto op = std::make_shared<RhsOperator>(grid, config.shear, config.model, RowExecutor(config.workers));
  return [op](const Field2D& xi, Field2D& out) { (*op)(xi, out); };
}

RunOutcome execute_run(const RunConfig& config, const RunOptions& options) {
  validate_config(config);
  const Grid2D grid = make_run_grid(config);
  RunOutcome outcome{RunResult{SimulationState{Field2D(grid), 0, 0.0}, std::nullopt}, {}, {}};

  SimulationState initial{options.initial ? *options.initial : make_initial_field(config), 0, 0.0};
  if (!(initial.xi.grid() == grid)) throw std::invalid_argument("initial field does not match the configured grid");
  initial.xi.apply_boundary();

  std::ofstream series_file;
  std::unique_ptr<SeriesWriter> writer;
  if (options.write_files) {
    outcome.directory = std::filesystem::path(config.output.dir) / config.output.label;
    std::error_code ec;
    std::filesystem::create_directories(outcome.directory, ec);
    if (ec) throw IoError("cannot create " + outcome.directory.string() + ": " + ec.message());
    {
      std::ofstream cfg(outcome.directory / "run.cfg");
      cfg << serialize_config(config);
      if (!cfg) throw IoError("failed writing run.cfg");
    }
    std::filesystem::remove(outcome.directory / "failure.txt", ec);
    series_file.open(outcome.directory / "series.csv", std::ios::trunc);
    if (!series_file) throw IoError("cannot open series.csv in " + outcome.directory.string());
    writer = std::make_unique<SeriesWriter>(series_file);
  }

  auto record = [&](const SimulationState& s) {
    DiagnosticsRecord r = make_record(s.xi, s.step, s.time, config.shear, config.ce);
    if (writer) writer->append(r);
    outcome.series.push_back(r);
    if (options.on_record) options.on_record(s, r);
  };
  auto snapshot = [&](const SimulationState& s) {
    if (options.write_files) {
      write_snapshot(outcome.directory / snapshot_name(s.step), s.xi, s.time, FieldId::xi);
      if (config.output.emit_eta) {
        write_snapshot(outcome.directory / snapshot_name(s.step, FieldId::eta), reconstruct_eta(s.xi, config.shear),
                       s.time, FieldId::eta);
      }
    }
    if (options.on_snapshot) options.on_snapshot(s);
  };

  record(initial);
  snapshot(initial);

  Sinks sinks;
  sinks.series = record;
  sinks.snapshot = snapshot;
  sinks.failure = [&](const SimulationState&, const BlowUp& b) {
    if (!options.write_files) return;
    std::ofstream f(outcome.directory / "failure.txt");
    f << b.describe() << '\n';
    if (!f) throw IoError("failed writing failure.txt");
  };
  outcome.result = run(std::move(initial), config.integrator, make_rhs_fn(config, grid), sinks);
  if (writer) series_file.flush();
  return outcome;
}

}  // namespace vtx
