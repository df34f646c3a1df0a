#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hocat {

/// Exit statuses of the command-line interface.
enum ExitCode { kExitOk = 0, kExitDomain = 1, kExitUsage = 2 };

/// Runs one command; `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hocat
