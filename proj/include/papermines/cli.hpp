#pragma once

#include <iosfwd>

namespace papermines {

/// Process exit codes of the command-line tool.
enum ExitCode : int {
    kExitOk = 0,
    kExitError = 1,    ///< I/O, usage or malformed input
    kExitRefused = 2,  ///< no uniqueness guarantee, or the question cannot be decided
    kExitMultiple = 3, ///< more than one solution
    kExitNone = 4,     ///< no solution
};

/// Runs the `papermines` command line: generate, solve, verify, spectrum, export-web.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace papermines
