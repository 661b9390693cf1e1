#include <iostream>
#include <string>
#include <vector>

#include "hodgeforge/cli.hpp"

int main(int argc, char** argv) {
    const std::vector<std::string> args(argv, argv + argc);
    return hodgeforge::cli::run(args, std::cout, std::cerr);
}
