#include <iostream>

#include "zetaseq/cli.hpp"

int main(int argc, char** argv) { return zetaseq::cli_main(argc, argv, std::cout, std::cerr); }
