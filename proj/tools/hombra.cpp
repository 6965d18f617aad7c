#include <iostream>

#include "hombra/cli.hpp"

int main(int argc, char** argv) { return hombra::cli::run(argc, argv, std::cout, std::cerr); }
