#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace blockroots::cli {

inline constexpr const char* kToolVersion = "0.1.0";

enum ExitCode : int { kOk = 0, kInputError = 1, kNumericalError = 2 };

// Runs one command. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace blockroots::cli
