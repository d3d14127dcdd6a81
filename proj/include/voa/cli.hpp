#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace voa {

// Runs one CLI invocation; writes a single JSON report to `out`.
// Exit code 0 when every check passes, 1 on failing checks, 2 on
// parse/config errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out);

}  // namespace voa
