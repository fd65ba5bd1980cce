#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace bridgeburn {

// Runs one command line (without the program name). Results go to `out`,
// diagnostics to `err`. Returns the process exit code:
// 0 ok, 1 game or domain error, 2 input error, 3 budget exceeded.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bridgeburn
