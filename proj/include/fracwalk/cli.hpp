#pragma once

#include <string>
#include <vector>

namespace fracwalk {

// Exit codes: 0 success, 2 validation error, 3 tolerance-check failure
// (converge), 4 I/O error.
inline constexpr int exit_ok = 0;
inline constexpr int exit_validation = 2;
inline constexpr int exit_tolerance = 3;
inline constexpr int exit_io = 4;

int run_cli(const std::vector<std::string>& args);
int run_cli(int argc, char** argv);

inline constexpr const char* tool_version = "0.1.0";

}  // namespace fracwalk
