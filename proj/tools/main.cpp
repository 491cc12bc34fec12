#include <iostream>
#include <vector>

#include "cforms/cli.hpp"

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return cforms::run_cli(args, std::cout, std::cerr);
}
