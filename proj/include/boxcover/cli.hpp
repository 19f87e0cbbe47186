#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace boxcover {

/// Process exit codes of the command line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitVerifyFailed = 1,
  kExitUsage = 2,
  kExitImplicit = 3,
};

/// Runs the boxcover command line. `args` excludes the program name.
/// Subcommands: tower, dist, verify, export.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace boxcover
