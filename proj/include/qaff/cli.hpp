#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qaff {

/// Dispatches one command line (without the program name).  Returns the
/// process exit code: 0 on success, 1 on domain errors, 2 on usage
/// errors.  All payload output is deterministic JSON on `out`.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

} // namespace qaff
