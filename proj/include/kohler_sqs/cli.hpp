#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kohler {

// Exit codes shared by all subcommands.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitNo = 2,  // construct: no 1-factor; exists: verdict No
  kExitViolations = 3,
  kExitUnknown = 4,
};

// Runs the command line `args` (without the program name). JSON goes to
// `out`, notes and errors to `err`.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace kohler
