/* Command-line entry point, callable from tests. */
#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace weylcrest {

// Exit status: 0 success, 1 domain error, 2 usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace weylcrest
