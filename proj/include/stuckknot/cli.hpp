#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace stuckknot::cli {

enum ExitCode { kOk = 0, kUsage = 1, kInput = 2, kBudget = 3 };

/// Runs one command line (without the program name). Diagram arguments are
/// file paths or `catalog:<name>`.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace stuckknot::cli
