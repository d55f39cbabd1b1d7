#include "burden/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return burden::cli::main(argc, argv, std::cout, std::cerr); }
