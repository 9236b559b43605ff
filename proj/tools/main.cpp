#include <iostream>

#include "singulant/cli.hpp"

int main(int argc, char** argv)
{
    return singulant::run_cli(argc, argv, std::cout, std::cerr);
}
