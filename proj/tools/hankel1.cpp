#include <iostream>
#include <string>
#include <vector>

#include "hankel1/cli/commands.hpp"

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return hankel1::cli::run_cli(args, std::cout, std::cerr);
}
