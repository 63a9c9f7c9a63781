#pragma once

#include <string>
#include <vector>

namespace kmsph {

// Runs the command line given the arguments after the program name.
// Exit codes: 0 pass, 1 check failure, 2 input error.
int run_cli(std::vector<std::string> args);

}  // namespace kmsph
