#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ptlab::cli {

enum ExitCode : int { kPass = 0, kToleranceFailure = 1, kUsageError = 2, kCapacityError = 3 };

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ptlab::cli
