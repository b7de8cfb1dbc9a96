#pragma once

#include <iosfwd>

namespace tricm::cli {

enum ExitCode : int { exit_ok = 0, exit_usage = 2, exit_input = 3, exit_cap = 4 };

/// Entry point of the `tricm` tool; argv[0] is the program name.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace tricm::cli
