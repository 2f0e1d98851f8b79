#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace premet::cli {

enum ExitCode : int {
  kSuccess = 0,
  /// A check or verification failed; the emitted report carries the
  /// counterexample.
  kCheckFailed = 1,
  /// Bad arguments or input. A JSON diagnostic goes to `err`.
  kInputError = 2,
};

/// Runs one invocation. `args` excludes the program name. Artifacts go to
/// `out` unless -o names a file.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace premet::cli
