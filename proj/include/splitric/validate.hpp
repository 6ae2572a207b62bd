#pragma once

#include <ostream>

namespace splitric {

/// Runs the built-in validation suite against the built-in default
/// configuration: one line per criterion, PASS or FAIL, plus the derived
/// values the checks rest on. Returns the number of failed criteria.
/// Self-contained: no input files, no network.
int run_validation(std::ostream& out);

}  // namespace splitric
