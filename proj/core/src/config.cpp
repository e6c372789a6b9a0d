#include "vtx/config.hpp"

#include <charconv>
#include <cmath>
#include <functional>
#include <map>
#include <optional>
#include <sstream>

namespace vtx {
namespace {

struct Issue {
  std::string key;
  std::string message;
};

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string format_list(const std::vector<double>& v) {
  std::string out;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k) out += ", ";
    out += format_double(v[k]);
  }
  return out;
}

double parse_double(std::string_view key, std::string_view s) {
  double v = 0.0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
    throw std::invalid_argument(std::string(key) + ": expected a number, got '" + std::string(s) + "'");
  }
  if (!std::isfinite(v)) throw std::invalid_argument(std::string(key) + ": value must be finite");
  return v;
}

long parse_long(std::string_view key, std::string_view s) {
  long v = 0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
    throw std::invalid_argument(std::string(key) + ": expected an integer, got '" + std::string(s) + "'");
  }
  return v;
}

bool parse_bool(std::string_view key, std::string_view s) {
  if (s == "true") return true;
  if (s == "false") return false;
  throw std::invalid_argument(std::string(key) + ": expected true or false");
}

std::vector<double> parse_list(std::string_view key, std::string_view s) {
  std::vector<double> out;
  while (true) {
    const auto comma = s.find(',');
    out.push_back(parse_double(key, trim(s.substr(0, comma))));
    if (comma == std::string_view::npos) break;
    s = s.substr(comma + 1);
  }
  return out;
}

void require(bool ok, std::string_view key, const std::string& message) {
  if (!ok) throw std::invalid_argument(std::string(key) + ": " + message);
}

int checked_int(std::string_view key, long v) {
  require(v >= 0 && v <= 1'000'000, key, "out of range");
  return static_cast<int>(v);
}

using Setter = std::function<void(RunConfig&, std::string_view)>;

const std::map<std::string, Setter, std::less<>>& setters() {
  static const std::map<std::string, Setter, std::less<>> table = {
      {"grid.nx", [](RunConfig& c, std::string_view v) { c.grid.nx = checked_int("grid.nx", parse_long("grid.nx", v)); }},
      {"grid.ny", [](RunConfig& c, std::string_view v) { c.grid.ny = checked_int("grid.ny", parse_long("grid.ny", v)); }},
      {"grid.lx", [](RunConfig& c, std::string_view v) { c.grid.lx = parse_double("grid.lx", v); }},
      {"grid.ly", [](RunConfig& c, std::string_view v) { c.grid.ly = parse_double("grid.ly", v); }},
      {"integrator.scheme",
       [](RunConfig& c, std::string_view v) {
         if (v == "rk4") {
           c.integrator.scheme = Scheme::rk4;
         } else if (v == "leapfrog") {
           c.integrator.scheme = Scheme::leapfrog;
         } else {
           throw std::invalid_argument("integrator.scheme: expected rk4 or leapfrog");
         }
       }},
      {"integrator.dt", [](RunConfig& c, std::string_view v) { c.integrator.dt = parse_double("integrator.dt", v); }},
      {"integrator.t_end",
       [](RunConfig& c, std::string_view v) { c.integrator.t_end = parse_double("integrator.t_end", v); }},
      {"integrator.snapshot_every",
       [](RunConfig& c, std::string_view v) {
         c.integrator.snapshot_every = parse_long("integrator.snapshot_every", v);
       }},
      {"integrator.series_every",
       [](RunConfig& c, std::string_view v) { c.integrator.series_every = parse_long("integrator.series_every", v); }},
      {"integrator.asselin",
       [](RunConfig& c, std::string_view v) { c.integrator.asselin = parse_double("integrator.asselin", v); }},
      {"shear.f0", [](RunConfig& c, std::string_view v) { c.shear.f0 = parse_double("shear.f0", v); }},
      {"shear.f1", [](RunConfig& c, std::string_view v) { c.shear.f1 = parse_double("shear.f1", v); }},
      {"model.kind",
       [](RunConfig& c, std::string_view v) {
         if (v == "wyf") {
           c.model.kind = ModelKind::wyf;
         } else if (v == "zk_limit") {
           c.model.kind = ModelKind::zk_limit;
         } else {
           throw std::invalid_argument("model.kind: expected wyf or zk_limit");
         }
       }},
      {"model.include_jacobian",
       [](RunConfig& c, std::string_view v) { c.model.include_jacobian = parse_bool("model.include_jacobian", v); }},
      {"model.jacobian_order",
       [](RunConfig& c, std::string_view v) {
         c.model.jacobian.order = static_cast<int>(parse_long("model.jacobian_order", v));
       }},
      {"init.kind",
       [](RunConfig& c, std::string_view v) {
         if (v == "gaussian") {
           c.init.kind = InitKind::gaussian;
         } else if (v == "zk") {
           c.init.kind = InitKind::zk;
         } else if (v == "two_zk") {
           c.init.kind = InitKind::two_zk;
         } else if (v == "plane") {
           c.init.kind = InitKind::plane;
         } else {
           throw std::invalid_argument("init.kind: expected gaussian, zk, two_zk or plane");
         }
       }},
      {"init.amplitude", [](RunConfig& c, std::string_view v) { c.init.amplitude = parse_double("init.amplitude", v); }},
      {"init.c", [](RunConfig& c, std::string_view v) { c.init.c = parse_list("init.c", v); }},
      {"init.x0", [](RunConfig& c, std::string_view v) { c.init.x0 = parse_list("init.x0", v); }},
      {"init.y0", [](RunConfig& c, std::string_view v) { c.init.y0 = parse_list("init.y0", v); }},
      {"init.theta", [](RunConfig& c, std::string_view v) { c.init.theta = parse_double("init.theta", v); }},
      {"init.profile", [](RunConfig& c, std::string_view v) { c.init.profile = std::string(v); }},
      {"init.field",
       [](RunConfig& c, std::string_view v) {
         if (v == "xi") {
           c.init.field = InitField::xi;
         } else if (v == "eta") {
           c.init.field = InitField::eta;
         } else {
           throw std::invalid_argument("init.field: expected xi or eta");
         }
       }},
      {"ce.slice",
       [](RunConfig& c, std::string_view v) {
         const CESpec s = parse_slice_rule(v);
         c.ce.slice_rule = s.slice_rule;
         c.ce.y = s.y;
       }},
      {"ce.exclude_mean",
       [](RunConfig& c, std::string_view v) { c.ce.exclude_mean = parse_bool("ce.exclude_mean", v); }},
      {"output.dir", [](RunConfig& c, std::string_view v) { c.output.dir = std::string(v); }},
      {"output.label", [](RunConfig& c, std::string_view v) { c.output.label = std::string(v); }},
      {"output.emit_eta", [](RunConfig& c, std::string_view v) { c.output.emit_eta = parse_bool("output.emit_eta", v); }},
      {"run.workers",
       [](RunConfig& c, std::string_view v) { c.workers = checked_int("run.workers", parse_long("run.workers", v)); }},
  };
  return table;
}

std::optional<Issue> find_issue(const RunConfig& c) {
  auto fail = [](std::string key, std::string msg) { return std::optional<Issue>(Issue{std::move(key), std::move(msg)}); };
  if (c.grid.nx < Grid2D::kMinPoints) return fail("grid.nx", "must be >= 8");
  if (c.grid.ny < Grid2D::kMinPoints) return fail("grid.ny", "must be >= 8");
  if (!(c.grid.lx > 0.0)) return fail("grid.lx", "must be positive");
  if (!(c.grid.ly > 0.0)) return fail("grid.ly", "must be positive");
  if (!(c.integrator.dt > 0.0)) return fail("integrator.dt", "must be positive");
  if (!(c.integrator.t_end >= 0.0)) return fail("integrator.t_end", "must be >= 0");
  if (c.integrator.snapshot_every < 1) return fail("integrator.snapshot_every", "must be >= 1");
  if (c.integrator.series_every < 1) return fail("integrator.series_every", "must be >= 1");
  if (!(c.integrator.asselin >= 0.0 && c.integrator.asselin < 0.5)) return fail("integrator.asselin", "must be in [0, 0.5)");
  if (c.model.jacobian.order != 2 && c.model.jacobian.order != 4) return fail("model.jacobian_order", "must be 2 or 4");
  if (c.workers < 1) return fail("run.workers", "must be >= 1");
  if (c.output.label.empty() || c.output.label.find('/') != std::string::npos) {
    return fail("output.label", "must be a non-empty name without '/'");
  }
  if (c.output.dir.empty()) return fail("output.dir", "must not be empty");
  if (c.ce.slice_rule == SliceRule::fixed_y && !(std::abs(c.ce.y) <= c.grid.ly)) {
    return fail("ce.slice", "y lies outside [-ly, ly]");
  }

  const InitConfig& in = c.init;
  const std::size_t want = in.kind == InitKind::two_zk ? 2 : 1;
  const std::string kind_name = in.kind == InitKind::gaussian ? "gaussian"
                          : in.kind == InitKind::zk     ? "zk"
                          : in.kind == InitKind::two_zk ? "two_zk"
                                                        : "plane";
  auto count_msg = [&](std::size_t got) {
    return "needs " + std::to_string(want) + " value(s) for init.kind=" + kind_name + ", got " + std::to_string(got);
  };
  if (in.kind != InitKind::gaussian && in.c.size() != want) return fail("init.c", count_msg(in.c.size()));
  if (in.kind != InitKind::plane) {
    if (in.x0.size() != want) return fail("init.x0", count_msg(in.x0.size()));
    if (in.y0.size() != want) return fail("init.y0", count_msg(in.y0.size()));
  }
  if (in.kind != InitKind::gaussian) {
    for (double v : in.c) {
      if (!(v > 0.0)) return fail("init.c", "wave speeds must be positive");
    }
  }
  for (double v : in.y0) {
    if (in.kind != InitKind::plane && !(std::abs(v) <= c.grid.ly)) return fail("init.y0", "center lies outside [-ly, ly]");
  }
  if (!in.profile.empty() && in.kind != InitKind::zk) return fail("init.profile", "only valid with init.kind=zk");
  return std::nullopt;
}

}  // namespace

ConfigError::ConfigError(int line, const std::string& message)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message : message), line_(line) {}

CESpec parse_slice_rule(std::string_view v) {
  CESpec s;
  if (v == "through_peak" || v == "through-peak") {
    s.slice_rule = SliceRule::through_peak;
  } else if (v.starts_with("y=")) {
    s.slice_rule = SliceRule::fixed_y;
    s.y = parse_double("ce.slice", trim(v.substr(2)));
  } else {
    throw std::invalid_argument("ce.slice: expected through_peak or y=<value>");
  }
  return s;
}

void validate_config(const RunConfig& config) {
  if (auto issue = find_issue(config)) throw ConfigError(0, issue->key + ": " + issue->message);
}

RunConfig parse_config(std::string_view text) {
  RunConfig config;
  std::map<std::string, int, std::less<>> lines;
  int line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw ConfigError(line_no, "expected 'key = value'");
    const std::string_view key = trim(line.substr(0, eq));
    const std::string_view value = trim(line.substr(eq + 1));
    const auto it = setters().find(key);
    if (it == setters().end()) throw ConfigError(line_no, "unknown key '" + std::string(key) + "'");
    if (value.empty()) throw ConfigError(line_no, std::string(key) + ": missing value");
    if (lines.count(key)) throw ConfigError(line_no, std::string(key) + ": duplicate key");
    try {
      it->second(config, value);
    } catch (const std::invalid_argument& e) {
      throw ConfigError(line_no, e.what());
    }
    lines.emplace(std::string(key), line_no);
  }
  if (auto issue = find_issue(config)) {
    const auto it = lines.find(issue->key);
    int line = it == lines.end() ? 0 : it->second;
    if (line == 0 && issue->key.starts_with("init.")) {
      if (const auto k = lines.find("init.kind"); k != lines.end()) line = k->second;
    }
    throw ConfigError(line, issue->key + ": " + issue->message);
  }
  return config;
}

std::string serialize_config(const RunConfig& c) {
  std::ostringstream os;
  os << "grid.nx = " << c.grid.nx << '\n'
     << "grid.ny = " << c.grid.ny << '\n'
     << "grid.lx = " << format_double(c.grid.lx) << '\n'
     << "grid.ly = " << format_double(c.grid.ly) << '\n'
     << "integrator.scheme = " << (c.integrator.scheme == Scheme::rk4 ? "rk4" : "leapfrog") << '\n'
     << "integrator.dt = " << format_double(c.integrator.dt) << '\n'
     << "integrator.t_end = " << format_double(c.integrator.t_end) << '\n'
     << "integrator.snapshot_every = " << c.integrator.snapshot_every << '\n'
     << "integrator.series_every = " << c.integrator.series_every << '\n'
     << "integrator.asselin = " << format_double(c.integrator.asselin) << '\n'
     << "shear.f0 = " << format_double(c.shear.f0) << '\n'
     << "shear.f1 = " << format_double(c.shear.f1) << '\n'
     << "model.kind = " << (c.model.kind == ModelKind::wyf ? "wyf" : "zk_limit") << '\n'
     << "model.include_jacobian = " << (c.model.include_jacobian ? "true" : "false") << '\n'
     << "model.jacobian_order = " << c.model.jacobian.order << '\n';
  const char* kind = c.init.kind == InitKind::gaussian ? "gaussian"
                     : c.init.kind == InitKind::zk     ? "zk"
                     : c.init.kind == InitKind::two_zk ? "two_zk"
                                                       : "plane";
  os << "init.kind = " << kind << '\n'
     << "init.amplitude = " << format_double(c.init.amplitude) << '\n'
     << "init.c = " << format_list(c.init.c) << '\n'
     << "init.x0 = " << format_list(c.init.x0) << '\n'
     << "init.y0 = " << format_list(c.init.y0) << '\n'
     << "init.theta = " << format_double(c.init.theta) << '\n';
  if (!c.init.profile.empty()) os << "init.profile = " << c.init.profile << '\n';
  os << "init.field = " << (c.init.field == InitField::xi ? "xi" : "eta") << '\n';
  if (c.ce.slice_rule == SliceRule::through_peak) {
    os << "ce.slice = through_peak\n";
  } else {
    os << "ce.slice = y=" << format_double(c.ce.y) << '\n';
  }
  os << "ce.exclude_mean = " << (c.ce.exclude_mean ? "true" : "false") << '\n'
     << "output.dir = " << c.output.dir << '\n'
     << "output.label = " << c.output.label << '\n'
     << "output.emit_eta = " << (c.output.emit_eta ? "true" : "false") << '\n'
     << "run.workers = " << c.workers << '\n';
  return os.str();
}

Grid2D make_run_grid(const RunConfig& config) {
  return Grid2D(config.grid.nx, config.grid.ny, config.grid.lx, config.grid.ly);
}

}  // namespace vtx
