#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace weave {

// Exit codes of the `weave` tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitVerifyFailed = 1,
  kExitUsage = 2,
  kExitBudget = 3,
};

// Runs `weave <args...>`; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace weave
