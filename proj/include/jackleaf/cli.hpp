#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace jackleaf {

// Dispatches one CLI invocation. args excludes the program name.
// Exit codes: 0 success, 1 verification failure or mathematical domain
// error, 2 usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace jackleaf
