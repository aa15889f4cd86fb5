#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lfree {

/// Runs the command line `args` (without the program name). Returns the exit
/// status: 0 on success, 2 on invalid input, 3 when a resource budget is exceeded.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace lfree
