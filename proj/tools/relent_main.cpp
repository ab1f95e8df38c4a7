#include <iostream>
#include <string>
#include <vector>

#include "relent/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return relent::runCli(args, std::cout, std::cerr);
}
