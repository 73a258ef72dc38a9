#include <iostream>

#include "shatter/cli.hpp"

int main(int argc, char** argv) { return shatter::cli::main_entry(argc, argv, std::cin, std::cout, std::cerr); }
