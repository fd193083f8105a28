#pragma once

#include <ostream>

namespace prodlab {

/// Exit statuses of the command-line tool.
enum ExitCode : int {
  kExitFound = 0,
  kExitNone = 1,
  kExitPrecondition = 2,
  kExitRefused = 3,
  kExitIo = 4,
  kExitInternal = 5,
};

/// Runs one command line (argv[0] is the program name).
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace prodlab
