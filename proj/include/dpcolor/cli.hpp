#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace dpcolor {

// Runs one CLI invocation. Exit codes: 0 ok, 1 refusal (bad input or an
// exceeded guard), 2 internal-consistency error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace dpcolor
