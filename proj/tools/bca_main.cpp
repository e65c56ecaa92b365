#include <iostream>

#include "bca/cli.hpp"

int main(int argc, char **argv) { return bca::run_cli(argc, argv, std::cout, std::cerr); }
