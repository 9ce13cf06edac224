#include <iostream>

#include "bendix_cli.hpp"

int main(int argc, char** argv) { return bendix::cli::main_entry(argc, argv, std::cout, std::cerr); }
