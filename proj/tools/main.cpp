#include <iostream>
#include <string>
#include <vector>

#include "ontokit/cli.hpp"

int main(int argc, char** argv) {
    const std::vector<std::string> args(argv + 1, argv + argc);
    return ontokit::run_cli(args, std::cout, std::cerr);
}
