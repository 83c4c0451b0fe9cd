#include <iostream>

#include "krsl2/cli.hpp"

int main(int argc, char** argv) { return krsl2::run_cli(argc, argv, std::cin, std::cout, std::cerr); }
