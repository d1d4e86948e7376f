#pragma once

#include <iosfwd>

namespace gpcnd {

/// The command-line front end (subcommands normalize, phi, ball, verify,
/// report). Returns the process exit code; verify returns 0 exactly when
/// every check passes. Kept out of main() so tests can drive it in-process.
int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

}  // namespace gpcnd
