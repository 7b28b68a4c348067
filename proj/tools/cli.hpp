#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace scs::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
  kOk = 0,
  kInputError = 1,     // unreadable file, malformed JSON, schema or usage error
  kPropertyFailure = 2 // a validation or precondition failed
};

/// Runs the tool with argv-style arguments (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace scs::cli
