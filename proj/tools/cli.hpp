#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace rqcli {

enum Exit { kOk = 0, kFailure = 1, kUsage = 2 };

// Runs one command line (without the program name). Reports go to out,
// diagnostics to err, unless --out names a file.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rqcli
