#include <iostream>

#include "edgecodes/cli.hpp"

int main(int argc, char** argv) { return edgecodes::cli::run(argc, argv, std::cout, std::cerr); }
