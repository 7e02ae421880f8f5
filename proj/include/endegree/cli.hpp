#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace endegree {

// Exit codes: 0 success, 2 budget exhausted, 3 premise failure
// (oracle exhausted), 4 usage error, 1 other errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace endegree
