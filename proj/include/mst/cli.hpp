#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mst {

enum ExitCode : int { kExitOk = 0, kExitInput = 1, kExitVerification = 2 };

/// Runs the mst command line. args excludes the program name.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mst
