#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace repspace::cli
{

enum ExitCode
{
    kSuccess = 0,
    kVerificationFailed = 1,
    kUsage = 2,
    kResourceGuard = 3
};

/// Runs the command line (args excludes the program name) and returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace repspace::cli
