#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace chordlab::cli {

// Exit codes, stable across releases.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;   // verification or precondition failure
inline constexpr int kExitResource = 2;  // resource cap exceeded
inline constexpr int kExitUsage = 64;    // bad flags or unparsable input

/// Resolved run configuration for one invocation.
struct RunConfig {
  std::string verb;
  std::string target;  // triangle kind, suite or map name
  int n = 0;
  int n_max = -1;  // -1: verb default
  std::string filter = "all";
  std::string statistic;
  std::string format;
  std::string out_path;
  int threads = 0;
  int cap = 8;
};

/// Runs the command line `args` (without the program name). Output goes to
/// `out` unless --out names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace chordlab::cli
