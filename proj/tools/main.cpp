#include <iostream>

#include "oddplanar/cli.hpp"

int main(int argc, char** argv) { return oddplanar::run_cli(argc, argv, std::cout, std::cerr); }
