#include <iostream>

#include "sca/cli.hpp"

int main(int argc, char** argv) { return sca::cli::run(argc, argv, std::cout, std::cerr); }
