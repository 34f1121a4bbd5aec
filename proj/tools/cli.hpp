#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace trapmeasure::cli {

enum ExitCode : int { ok = 0, invalid_input = 1, internal_failure = 2, violation = 3 };

/// Runs one invocation. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace trapmeasure::cli
