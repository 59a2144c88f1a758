#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace rcg::cli {

// Runs the command line given by args (without the program name).
// Exit codes: 0 success, 1 verification failure, 2 malformed input.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

} // namespace rcg::cli
