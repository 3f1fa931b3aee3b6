#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cdes::cli {

enum ExitCode : int {
    kSuccess = 0,
    kValidationError = 1,
    kVerificationMismatch = 2,
};

/// Runs one command line (args excludes the program name). Results go to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace cdes::cli
