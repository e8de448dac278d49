#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cboom::cli {

enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kUsage = 2 };

// Full command line including the program name.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cboom::cli
