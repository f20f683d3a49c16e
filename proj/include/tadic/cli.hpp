#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace tadic {

// Runs the command-line driver on args (without the program name).
// Returns 0 on success, 2 on parse/contract/domain errors, 3 when a result
// needs digits beyond the working precision, 1 if a self-check fails.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace tadic
