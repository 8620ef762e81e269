#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kanrew::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,             // bad flags, unreadable file
  kParseError = 2,        // malformed document or literal
  kValidationError = 3,   // well-formed input violating the data model
  kCompletionLimit = 4,   // completion stopped at max-rules / max-passes
  kInternalError = 5,     // reduction step limit; indicates a bug
};

/// Runs one kanrew command. `args` excludes the program name. Normal
/// output goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kanrew::cli
