#include "cstar/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return cstar::cli::main_entry(argc, argv, std::cout, std::cerr); }
