#include <iostream>
#include <string>
#include <vector>

#include "anst/io.hpp"

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return anst::run_cli(args, std::cout, std::cerr);
}
