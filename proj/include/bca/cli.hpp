#ifndef BCA_CLI_HPP
#define BCA_CLI_HPP

#include <ostream>

namespace bca {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitSemantic = 2,
  kExitInput = 3,
  kExitGuard = 4,
};

/// Entry point of the `bca` tool; writes results to `out` and diagnostics to
/// `err`, and returns the process exit code.
int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

} // namespace bca

#endif
