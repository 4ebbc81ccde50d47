#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wreath::cli {

/// Runs one CLI invocation. argv-style arguments without the program
/// name. Exit codes: 0 success, 1 domain error, 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace wreath::cli
