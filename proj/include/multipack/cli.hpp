#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace multipack {

// Command-line driver; kept in the library so tests can call it directly.
// Exit codes: 0 ok, 1 failed verification or infeasible certificate, 2 usage.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace multipack
