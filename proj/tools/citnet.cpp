#include "citnet/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return citnet::cli::main(argc, argv, std::cout, std::cerr); }
