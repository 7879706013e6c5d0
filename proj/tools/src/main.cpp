#include "eggraph/cli/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return eggraph::cli::run(argc, argv, std::cout, std::cerr); }
