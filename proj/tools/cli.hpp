#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace nchs::cli {

/// Parses argv-style arguments (without the program name) and runs one subcommand.
/// Returns the process exit status: 0 ok, 1 mathematical failure, 2 input error,
/// 3 resource cap.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Directory holding the bundled example inputs; NCHS_DATA overrides the built-in path.
std::string data_dir();

}  // namespace nchs::cli
