#pragma once

#include <iosfwd>

namespace subseaflush {

enum ExitCode : int {
    kExitOk = 0,
    kExitValidation = 1,
    kExitConvergence = 2,
    kExitIo = 3,
};

// Entry point of the flushplan tool. Subcommands: flush, sweep, reel,
// compare, fit.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace subseaflush
