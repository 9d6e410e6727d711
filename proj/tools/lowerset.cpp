#include <iostream>

#include "lowerset/cli.hpp"

int main(int argc, char** argv) { return lowerset::cli::run(argc, argv, std::cout, std::cerr); }
