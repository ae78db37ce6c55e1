#pragma once

#include <string>
#include <vector>

namespace treenergy {

/// Runs the command-line surface. Exit codes: 0 success / verification
/// PASS, 1 verification FAIL, 2 usage or domain error.
int run_cli(int argc, const char* const* argv);
int run_cli(const std::vector<std::string>& args);  // args without program name

}  // namespace treenergy
