#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace topo::cli {

/// Exit codes: 0 success, 1 a verdict failed, 2 usage or input error.
enum ExitCode : int { kOk = 0, kVerdictFailed = 1, kUsage = 2 };

/// Runs one subcommand. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace topo::cli
