#include <iostream>

#include "shadow/cli/cli.hpp"

int main(int argc, char** argv) { return shadow::cli::run(argc, argv, std::cout, std::cerr); }
