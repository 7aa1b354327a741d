#include <iostream>

#include "graphdep/cli.hpp"

int main(int argc, char** argv) { return graphdep::cli::run(argc, argv, std::cout, std::cerr); }
