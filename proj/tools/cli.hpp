#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace curvemult::cli {

/// Runs the command line (without the program name) and returns the exit
/// code: 0 success, 2 parse error, 3 unsupported input, 4 verification
/// failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace curvemult::cli
