#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace eulerflag {

// args excludes the program name. Exit codes: 0 success or check passed,
// 1 check failed (witness on `out`), 2 input error (message on `err`).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace eulerflag
