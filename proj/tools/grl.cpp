#include <iostream>

#include "grl/cli.hpp"

int main(int argc, char** argv) { return grl::run_cli(argc, argv, std::cout, std::cerr); }
