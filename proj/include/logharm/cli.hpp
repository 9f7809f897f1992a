#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace logharm::cli {

enum ExitCode : int { kSuccess = 0, kFailure = 1, kUsage = 2 };

/// Entry point shared by the `logharm` binary and the tests. `args`
/// excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Rounds to `digits` significant decimal digits.
double round_significant(double x, int digits = 12);

}  // namespace logharm::cli
