#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace expasym {

enum ExitCode : int { kExitPass = 0, kExitFail = 1, kExitUsage = 2 };

/// Runs the command line tool on argv-style arguments (args[0] is the
/// program name). Reports go to out unless --output names a file;
/// diagnostics go to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace expasym
