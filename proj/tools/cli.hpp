#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace vba::cli {

/// Runs one command line (without the program name). Returns 0 on success,
/// 1 when no solution exists, the problem is unsatisfiable or a property
/// check reports violations, and 2 on input errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace vba::cli
