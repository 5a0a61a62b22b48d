#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace spectral_chroma::cli {

enum ExitCode : int {
    kSuccess = 0,
    kUsage = 1,
    kComputation = 2,
    kVerification = 3,
};

/// Runs one subcommand. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace spectral_chroma::cli
