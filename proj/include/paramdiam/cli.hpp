#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace paramdiam::cli {

enum ExitCode : int {
  kOk = 0,
  kOther = 1,
  kParse = 2,
  kDisconnected = 3,
  kInvalidModulator = 4,
  kVerifyMismatch = 5,
};

// Subcommands: params, solve, generate, bench, verify-apsp. `args` excludes
// the program name. Reports go to `out`, diagnostics and traces to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace paramdiam::cli
