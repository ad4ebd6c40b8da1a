#include <iostream>
#include <string>
#include <vector>

#include "dpcolor/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return dpcolor::run_cli(args, std::cout, std::cerr);
}
