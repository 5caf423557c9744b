#include <iostream>

#include "stratolink/cli/commands.hpp"

int main(int argc, char** argv)
{
    return stratolink::cli::run(argc, argv, std::cout, std::cerr);
}
