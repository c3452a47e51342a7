#include <iostream>

#include "binedge/cli.hpp"

int main(int argc, char** argv) { return binedge::cli::run(argc, argv, std::cout, std::cerr); }
