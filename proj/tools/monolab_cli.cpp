#include <iostream>

#include "monolab/commands.hpp"

int main(int argc, char** argv) { return monolab::run_cli(argc, argv, std::cout, std::cerr); }
