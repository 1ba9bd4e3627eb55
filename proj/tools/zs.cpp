#include <iostream>

#include "zs/cli.hpp"

int main(int argc, char** argv) { return zs::run_cli(argc, argv, std::cout, std::cerr); }
