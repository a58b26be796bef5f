#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qgmf::cli {

enum ExitCode : int { kOk = 0, kMismatch = 1, kUsage = 2 };

// Runs the command line `args` (args[0] is the program name). Results go to
// `out` unless --out names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qgmf::cli
