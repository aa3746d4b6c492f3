#include <iostream>

#include "chowforge/cli.hpp"

int main(int argc, char** argv) { return chowforge::run_cli(argc, argv, std::cout, std::cerr); }
