#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace descartes {

/// Exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 1;  // input parsed but failed validation
inline constexpr int kExitUsage = 2;

/// Runs one command line (args[0] is the program name).  Results go to
/// `out` unless --out names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace descartes
