#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fhl::cli {

enum ExitCode { kOk = 0, kFailure = 1, kUsage = 2 };

// Runs one command line (without the program name). Results go to `out`,
// diagnostics to `err`. Output bytes depend only on the arguments.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fhl::cli
