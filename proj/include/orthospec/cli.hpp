#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace orthospec::cli {

/// Exit codes of the orthospec command.
enum ExitCode : int {
  kSuccess = 0,
  kInvalidArguments = 2,
  kValidationFailure = 3,
  kIdentityViolation = 4,
};

/// Parses argv (argv[0] is the program name), runs one subcommand and
/// returns its exit code. Results go to `out` unless --out names a file;
/// diagnostics are a single line on `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace orthospec::cli
