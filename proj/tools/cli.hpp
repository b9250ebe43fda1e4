#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace fliess::cli {

// Runs one command line (without the program name). Returns the process
// exit code: 0 success, 2 parse error, 3 domain error, 4 capacity error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fliess::cli
