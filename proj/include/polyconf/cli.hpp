#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace polyconf {

// Exit codes of the command-line surface.
enum ExitCode : int {
  kExitSuccess = 0,
  kExitVerdictFalse = 1,
  kExitUsage = 2,
  kExitInternal = 3,
};

// Runs one CLI invocation; `args` excludes the program name.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace polyconf
