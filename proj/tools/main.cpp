#include <iostream>

#include "commands.hpp"

int main(int argc, char** argv)
{
    std::vector<std::string> const args(argv + 1, argv + argc);
    return bilinear::cli::run(args, std::cout, std::cerr);
}
