#include <iostream>
#include <string>
#include <vector>

#include "rcg/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return rcg::cli::run(args, std::cout, std::cerr);
}
