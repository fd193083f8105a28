#include "prodlab/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return prodlab::run_cli(argc, argv, std::cout, std::cerr); }
