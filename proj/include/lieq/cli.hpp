#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace lieq {

/// Runs one command line (without the program name).
/// Returns 0 when every check passes, 1 on a failed check, 2 on usage or parse errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lieq
