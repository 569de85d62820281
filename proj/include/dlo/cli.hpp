#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace dlo::cli {

/// Exit codes.
enum : int { kHolds = 0, kFails = 1, kUsage = 2 };

/// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dlo::cli
