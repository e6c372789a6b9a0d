#pragma once

#include <functional>
#include <string>
#include <vector>

namespace vtx::verify {

struct Outcome {
  std::string id;     ///< "A1" .. "A13"
  std::string title;
  bool pass = false;
  bool skipped = false;
  std::string detail;
};

struct SuiteOptions {
  /// Include A11 (nine T=50 runs).
  bool extended = false;
  /// Restrict to these ids; empty runs everything.
  std::vector<std::string> only;
  /// Committed golden snapshot to compare byte for byte (A13); empty skips
  /// the file comparison.
  std::string golden_snapshot;
  /// Progress lines for long runs.
  std::function<void(const std::string&)> log;
  /// Called as soon as each criterion finishes.
  std::function<void(const Outcome&)> on_outcome;
};

std::vector<Outcome> run_acceptance(const SuiteOptions& options);

/// "A4 PASS plane soliton transport: ..." (or FAIL / SKIP).
std::string format_outcome(const Outcome& o);

}  // namespace vtx::verify
