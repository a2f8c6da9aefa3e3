#include <iostream>

#include "tgwa/cli.hpp"

int main(int argc, char** argv) { return tgwa::run_cli(argc, argv, std::cin, std::cout, std::cerr); }
