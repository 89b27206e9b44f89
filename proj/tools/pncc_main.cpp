#include <iostream>
#include <vector>

#include "pncc/cli.hpp"

int main(int argc, char** argv) {
    const std::vector<std::string> args(argv + 1, argv + argc);
    return pncc::cli::run_cli(args, std::cout, std::cerr);
}
