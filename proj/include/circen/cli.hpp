#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace circen::cli {

enum ExitCode : int {
    kSuccess = 0,
    kVerificationFailed = 1,
    kBadArguments = 2,
    kIoError = 3,
};

/// Runs the command line (args excludes the program name). Records go to
/// out, diagnostics to err. Returns one of ExitCode.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace circen::cli
