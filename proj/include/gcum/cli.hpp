// Command-line front end: parses a query string, runs the engine and prints
// the requested output sections.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gcum {

/// Runs the tool on the given arguments (without the program name), writing
/// results to out and diagnostics to err.  Exit codes: 0 success, 2 parse
/// error, 3 resource-limit error, 4 file/format/evaluation error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gcum
