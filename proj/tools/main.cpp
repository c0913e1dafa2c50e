#include <iostream>
#include <string>
#include <vector>

#include "dkmax_cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return dkmax::cli::run_command(args, std::cout, std::cerr);
}
