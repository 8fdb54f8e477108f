#include <iostream>

#include "orthospec/cli.hpp"

int main(int argc, char** argv) { return orthospec::cli::run(argc, argv, std::cout, std::cerr); }
