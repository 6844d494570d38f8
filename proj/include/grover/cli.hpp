#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace grover {

/// Runs the command-line interface on the given arguments (program name
/// excluded), writing results to `out` and diagnostics to `err`.
/// Returns the process exit code: 0 on success, 1 on usage or domain
/// errors, 2 when a requested success threshold is unattainable.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace grover
