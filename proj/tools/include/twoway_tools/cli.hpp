#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace twoway::cli {

// Exit codes: 0 success, 1 analysis-negative result, 2 usage or parse error.
inline constexpr int kOk = 0;
inline constexpr int kNegative = 1;
inline constexpr int kUsage = 2;

// Runs the twt command line on args (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace twoway::cli
