#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sparsity::cli {

enum ExitCode : int {
    kOk = 0,
    kFailure = 1,        // validation or verification failure
    kUsage = 2,
    kRefused = 3,        // size limit, budget or overflow
    kIndeterminate = 4,
};

// Runs one invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sparsity::cli
