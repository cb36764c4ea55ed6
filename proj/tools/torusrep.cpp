#include <iostream>

#include "torus/cli.hpp"

int main(int argc, char** argv) { return torus::run_cli(argc, argv, std::cin, std::cout, std::cerr); }
