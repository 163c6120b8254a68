#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hl::cli {

enum ExitCode : int { kOk = 0, kViolation = 1, kUsage = 2 };

/// Runs one command line (without the program name). `in` backs the "-"
/// input source.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace hl::cli
