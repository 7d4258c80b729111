#include <iostream>

#include "cfrac_cli/app.hpp"

int main(int argc, char** argv) { return cfrac::cli::run(argc, argv, std::cout, std::cerr); }
