#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace gauss_forge::cli {

/// Runs one command line (without the program name). Returns the process
/// exit code: 0 success, 1 validation error, 2 usage error.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gauss_forge::cli
