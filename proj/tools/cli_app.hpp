#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace singlet::cli
{

enum ExitCode
{
    ok = 0,
    verify_failed = 1,
    config_error = 2,
};

/// Runs `singlet <args...>` (args excludes the program name). Nothing is
/// written to `out` when the configuration is rejected.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace singlet::cli
