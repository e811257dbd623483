#include <iostream>

#include "marklab/cli.hpp"

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return marklab::run_cli(args, std::cin, std::cout, std::cerr);
}
