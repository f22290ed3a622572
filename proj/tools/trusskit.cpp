#include <iostream>

#include "trusskit/cli.hpp"

int main(int argc, char** argv) { return trusskit::run_cli(argc, argv, std::cout, std::cerr); }
