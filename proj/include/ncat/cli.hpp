#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ncat {

/// Run the command line given as plain arguments (no program name). Output
/// goes to `out`, diagnostics to `err`. Returns the process exit code:
/// 0 full pass, 1 a check failed, 2 malformed input or cap exceeded.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ncat
