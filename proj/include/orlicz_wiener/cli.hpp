#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace orlicz_wiener::cli {

inline constexpr const char* kDefaultSpace = "pow:p=1;pow:p=1;const:1;const:1;const:1;const:1";

enum ExitCode : int {
  kOk = 0,
  kViolation = 1,
  kUsage = 2,
  kObstruction = 3,
};

struct RunConfig {
  std::string command;                // norm | weights | verify | factorize | selftest
  std::string input;                  // path, or inline JSON starting with '{'
  std::string space = kDefaultSpace;  // "Phi;Psi;phi;w;psi;rho"
  std::optional<double> tol;          // default 1e-12 for norms, 1e-8 for factorization
  std::size_t trials = 1000;
  std::uint64_t seed = 1;
  int support = 64;
  std::size_t grid = 256;
  int trunc = 64;
  std::string format = "json";        // json | csv | human
  std::string replay;                 // "<suite>/<seed>/<trial>/<support>"
};

/// Runs the CLI with argv-style arguments (args[0] is the program name).
/// Output goes to `out`, diagnostics to `err`; returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace orlicz_wiener::cli
