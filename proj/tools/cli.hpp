#pragma once

#include <iosfwd>

namespace qutrit::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kValidation = 2,
  kCheckFailed = 3,
};

/// Runs the command line. Output files are written directly; results without
/// --output go to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qutrit::cli
