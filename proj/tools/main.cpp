#include <iostream>

#include "planesing/cli/cli.hpp"

int main(int argc, char** argv) { return planesing::cli::main_entry(argc, argv, std::cout, std::cerr); }
