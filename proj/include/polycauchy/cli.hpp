#ifndef POLYCAUCHY_CLI_HPP
#define POLYCAUCHY_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace polycauchy
{

// Exit status of cli_dispatch.
enum ExitStatus : int {
    exit_ok = 0,
    exit_check_failed = 1,
    exit_usage = 2,
};

// Runs the command line `args` (program name excluded), writing results to
// `out` and diagnostics to `err`.
int cli_dispatch(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace polycauchy

#endif
