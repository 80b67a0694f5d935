#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace entrogeo::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kVerifyFailure = 1;
inline constexpr int kUsageError = 2;
inline constexpr int kNumericalFailure = 3;

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv);

}  // namespace entrogeo::cli
