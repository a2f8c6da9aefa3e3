#pragma once

#include <iosfwd>

namespace tgwa {

/// Exit codes of the command-line tool.
enum ExitCode { kExitOk = 0, kExitFailed = 1, kExitInput = 2 };

/// Runs one subcommand. Documents are read from `in` when the input path is
/// "-"; results go to `out` as JSON, diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace tgwa
