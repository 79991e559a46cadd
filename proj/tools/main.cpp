#include <iostream>

#include "nary/cli.hpp"

int main(int argc, char** argv) { return nary::cli::run(argc, argv, std::cout, std::cerr); }
