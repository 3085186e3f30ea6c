#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) { return confined_atom::cli::run(argc, argv, std::cout, std::cerr); }
