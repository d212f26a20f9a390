#include <iostream>

#include "tdmono/cli/run.hpp"

int main(int argc, char** argv)
{
    return tdmono::cli::run(argc, argv, std::cout, std::cerr);
}
