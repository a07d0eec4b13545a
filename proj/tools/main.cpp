#include "modcohom/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return modcohom::run_cli(argc, argv, std::cout, std::cerr); }
