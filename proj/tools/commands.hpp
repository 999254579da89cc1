#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace bilinear::cli {

inline constexpr int exit_pass = 0;
inline constexpr int exit_fail = 1;
inline constexpr int exit_usage = 2;

//! Runs the command line given without the program name; returns the exit code.
int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

}  // namespace bilinear::cli
