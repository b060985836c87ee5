#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace aniso {

/// Runs one subcommand; returns the process exit code (0 ok, 2 invalid input,
/// 3 numerical failure, 4 resource cap).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run_cli(int argc, char** argv);

}  // namespace aniso
