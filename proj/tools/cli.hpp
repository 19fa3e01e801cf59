#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace racg::cli {

// Exit codes: 0 success, 1 mathematical refutation, 2 bad input or usage.
inline constexpr int kExitOk = 0;
inline constexpr int kExitRefuted = 1;
inline constexpr int kExitInput = 2;

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace racg::cli
