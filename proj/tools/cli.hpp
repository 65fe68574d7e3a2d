#ifndef WORDLOGIC_TOOLS_CLI_HPP
#define WORDLOGIC_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace wordlogic::cli {

/// Exit statuses shared by every verb.
enum Status : int { ok = 0, negative = 1, usage = 2 };

/// Runs the command line `args` (without the program name), writing the
/// report to `out` and diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wordlogic::cli

#endif  // WORDLOGIC_TOOLS_CLI_HPP
