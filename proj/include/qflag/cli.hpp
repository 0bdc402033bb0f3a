#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qflag {

// Exit codes: 0 success, 1 violated --expect, 2 parse or validation error.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace qflag
