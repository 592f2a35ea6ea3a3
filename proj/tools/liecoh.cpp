#include <iostream>
#include <string>
#include <vector>

#include "liecoh/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return liecoh::cli::execute(args, std::cout, std::cerr);
}
