#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace olq::cli {

// Runs one CLI invocation. args excludes the program name. Exit codes:
// 0 success, 1 domain error (one-line diagnostic on err), 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Shortest round-trip decimal representation of a double.
std::string format_double(double value);

}  // namespace olq::cli
