#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gspline::cli {

/// Runs one command line (without the program name). Reports go to `out`,
/// diagnostics to `err`. Returns the process exit code: 0 success, 1
/// computational failure or a verify disagreement, 2 bad input.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gspline::cli
