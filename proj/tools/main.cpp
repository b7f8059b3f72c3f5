#include <iostream>

#include "coinrace_cli.hpp"

int main(int argc, char** argv) { return coinrace::cli::run(argc, argv, std::cout, std::cerr); }
