#ifndef SLP_CLI_HPP
#define SLP_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace slp {

/// Runs one CLI invocation. `args` excludes the program name. Writes the
/// report to `out` and diagnostics to `err`.
///
/// Exit codes: 0 success / property holds, 1 property fails or verdict false,
/// 2 input or usage error.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace slp

#endif
