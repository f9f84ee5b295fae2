#include <iostream>

#include "colourbench/cli.hpp"

int main(int argc, char** argv)
{
    return colourbench::cli::run(argc, argv, std::cout, std::cerr);
}
