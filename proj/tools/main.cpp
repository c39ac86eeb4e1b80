#include <iostream>
#include <string>
#include <vector>

#include "cluscomp/cli.hpp"

int main(int argc, char** argv) {
    const std::vector<std::string> args(argv + 1, argv + argc);
    return cluscomp::run_cli(args, std::cout, std::cerr);
}
