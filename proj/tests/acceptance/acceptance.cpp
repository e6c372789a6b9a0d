// Acceptance suite: one PASS/FAIL line per criterion.
//
//   acceptance [--extended] [--golden <file>] [A1 A4 ...]

#include <cstring>
#include <iostream>

#include "verify_suite.hpp"

int main(int argc, char** argv) {
  vtx::verify::SuiteOptions options;
  for (int k = 1; k < argc; ++k) {
    if (std::strcmp(argv[k], "--extended") == 0) {
      options.extended = true;
    } else if (std::strcmp(argv[k], "--golden") == 0 && k + 1 < argc) {
      options.golden_snapshot = argv[++k];
    } else {
      options.only.emplace_back(argv[k]);
    }
  }
  options.log = [](const std::string& line) { std::cerr << "  " << line << '\n'; };
  options.on_outcome = [](const vtx::verify::Outcome& o) { std::cout << vtx::verify::format_outcome(o) << std::endl; };
  try {
    const auto outcomes = vtx::verify::run_acceptance(options);
    bool ok = !outcomes.empty();
    for (const auto& o : outcomes) ok = ok && (o.pass || o.skipped);
    return ok ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "acceptance: " << e.what() << '\n';
    return 2;
  }
}
