// Command-line front end; main() only forwards to run_cli.
#pragma once

#include <ostream>

namespace qschur::cli {

enum ExitCode { kPass = 0, kFail = 1, kUsage = 2, kResource = 3 };

/// Runs one qschur invocation, writing the report to out and diagnostics to err.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qschur::cli
