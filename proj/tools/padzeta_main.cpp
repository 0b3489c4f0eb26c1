#include <padzeta/cli.hpp>

#include <iostream>

int main(int argc, char** argv) { return padzeta::cli::main(argc, argv, std::cout, std::cerr); }
