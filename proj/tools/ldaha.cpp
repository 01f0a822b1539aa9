#include <iostream>

#include "ldaha/cli.hpp"

int main(int argc, char **argv) { return ldaha::cli_main(argc, argv, std::cout, std::cerr); }
