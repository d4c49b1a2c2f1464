#pragma once

#include <iosfwd>

namespace wsnga::cli {

/// Exit codes; every failure class gets its own.
enum ExitCode : int {
    kOk = 0,
    kUsage = 2,
    kConfig = 3,
    kInvalid = 4,
    kIo = 5,
    kInternal = 70,
};

/// Entry point behind the `wsnga` binary. Subcommands: deploy, evolve,
/// lifetime, compare, oracle, plot; `--print-config` dumps effective defaults.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace wsnga::cli
