#include "relgw/cli.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    return relgw::cli::run(argc, argv, std::cout, std::cerr);
}
