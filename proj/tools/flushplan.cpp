#include "subseaflush/cli.h"

#include <iostream>

int main(int argc, char** argv)
{
    return subseaflush::run_cli(argc, argv, std::cout, std::cerr);
}
