#include <iostream>
#include <string>
#include <vector>

#include "deltaj/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return deltaj::run_cli(args, std::cout, std::cerr);
}
