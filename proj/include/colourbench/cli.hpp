#pragma once

#include <iosfwd>

namespace colourbench::cli {

/// Process exit codes.
enum ExitCode : int {
    ok = 0,
    usage_error = 1,          // bad arguments or malformed input
    verification_failure = 2, // a colouring, claim or membership check came out negative
    budget_exhausted = 3,
};

/// Runs one command line (argv[0] is the program name). All normal output
/// goes to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace colourbench::cli
