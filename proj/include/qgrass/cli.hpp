#pragma once

#include <string>
#include <vector>

namespace qgrass
{

struct CliResult
{
    int exit_code = 0;
    std::string out;
    std::string err;
};

/// Runs the command line `args` (program name excluded). Exit codes: 0 on
/// success, 1 when a verification fails or a computation errors, 2 on bad arguments.
CliResult run(const std::vector<std::string> &args);

} // namespace qgrass
