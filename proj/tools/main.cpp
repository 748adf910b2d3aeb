#include <iostream>
#include <string>
#include <vector>

#include "floquet/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return floquet::run_cli(args, std::cout, std::cerr);
}
