#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace fq::cli {

// Exit codes of run_command.
inline constexpr int exit_ok = 0;
inline constexpr int exit_violation = 1; // a Granville record (l = p excluded) was violated
inline constexpr int exit_usage = 2;
inline constexpr int exit_failure = 3;   // cache corruption or an internal arithmetic error

// Parses args (without the program name) and runs one subcommand.
int run_command(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

int run_command(int argc, char **argv);

} // namespace fq::cli
