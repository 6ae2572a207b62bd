#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace splitric {

/// Runs one CLI invocation. `args` excludes the program name.
/// Exit status: 0 success, 1 evaluation/validation failure, 2 usage error.
/// Results go to `out` (or the file named by --output), diagnostics to `err`.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace splitric
