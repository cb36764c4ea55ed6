#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace torus {

/// Exit codes of the command-line front-end.
enum ExitCode : int {
  kExitPass = 0,
  kExitPropertyFailure = 1,
  kExitUsage = 2,  // parse or parameter error
  kExitDecode = 3,
  kExitCap = 4,
};

/// Runs one invocation. `args` excludes the program name. Output documents
/// go to `out` (or the --out file), diagnostics to `err`; '-' as an input
/// path reads `in`.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);
int run_cli(int argc, char** argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace torus
