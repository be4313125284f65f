#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "pcoef/types.hpp"

namespace pcoef {

/// Exit codes of the command-line tool.
enum ExitCode : int { kExitPass = 0, kExitViolation = 1, kExitUsage = 2 };

/// Parses "a+bi", "a-bi", "a", "bi", "i", "-i" (also with 'j'). Throws
/// std::invalid_argument on malformed input.
Complex parse_complex(const std::string& text);

/// Runs the command line (args excludes the program name) writing reports to
/// `out` and diagnostics to `err`. Returns an ExitCode.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pcoef
