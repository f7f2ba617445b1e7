#include "papermines/cli.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    return papermines::run_cli(argc, argv, std::cout, std::cerr);
}
