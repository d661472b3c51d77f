#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace weylbill::cli {

/// Exit codes of the command-line tool.
enum ExitCode : int {
    ok = 0,
    failure = 1,
    usage = 2,
    non_convergence = 3,
    geometry = 4,
};

/// Run one command. The report goes to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Convenience overload; args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace weylbill::cli
