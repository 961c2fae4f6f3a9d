#include <iostream>

#include "shimorin/cli.hpp"

int main(int argc, char** argv) { return shimorin::run_cli(argc, argv, std::cout, std::cerr); }
