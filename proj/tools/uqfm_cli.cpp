#include <iostream>
#include <vector>

#include "uqfm/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return uqfm::run_cli(std::move(args), std::cout, std::cerr);
}
