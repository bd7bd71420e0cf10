#include "ntil/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return ntil::cli::main_entry(argc, argv, std::cout, std::cerr); }
