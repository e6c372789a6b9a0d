#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "vtx/entropy.hpp"
#include "vtx/timestep.hpp"
#include "vtx/wyf.hpp"

namespace vtx {

enum class InitKind { gaussian, zk, two_zk, plane };
enum class InitField { xi, eta };

struct GridConfig {
  int nx = 200;
  int ny = 100;
  double lx = 20.0;
  double ly = 10.0;

  bool operator==(const GridConfig&) const = default;
};

struct InitConfig {
  InitKind kind = InitKind::zk;
  double amplitude = 3.0;  ///< gaussian only
  std::vector<double> c{1.0};
  std::vector<double> x0{0.0};
  std::vector<double> y0{1.0};
  double theta = 0.0;   ///< plane only
  std::string profile;  ///< optional (r, phi) CSV for kind zk
  /// Whether the profile is assigned to xi or to eta (xi minus the ramp).
  InitField field = InitField::xi;

  bool operator==(const InitConfig&) const = default;
};

struct OutputConfig {
  std::string dir = "runs";
  std::string label = "run";
  bool emit_eta = false;

  bool operator==(const OutputConfig&) const = default;
};

struct RunConfig {
  GridConfig grid;
  IntegratorConfig integrator{Scheme::rk4, 1e-4, 50.0, 10000, 100, 0.01};
  ShearFlow shear;
  Model model;
  InitConfig init;
  CESpec ce;
  OutputConfig output;
  int workers = 1;

  bool operator==(const RunConfig&) const = default;
};

class ConfigError : public std::runtime_error {
 public:
  ConfigError(int line, const std::string& message);
  /// 1-based; 0 when the problem is not tied to a line.
  int line() const { return line_; }

 private:
  int line_;
};

/// Parses `key = value` lines with `#` comments. Unset keys keep the
/// RunConfig defaults. Throws ConfigError.
RunConfig parse_config(std::string_view text);

/// Every key, one per line, in a form parse_config reads back to an equal
/// config.
std::string serialize_config(const RunConfig& config);

/// Cross-field checks shared by the parser and by programmatic configs.
/// Throws ConfigError with line 0.
void validate_config(const RunConfig& config);

Grid2D make_run_grid(const RunConfig& config);

/// "through_peak", "through-peak" or "y=<value>"; other fields keep their
/// defaults. Throws std::invalid_argument.
CESpec parse_slice_rule(std::string_view value);

}  // namespace vtx
