#include <iostream>

#include "adai/cli.hpp"

int main(int argc, char** argv) { return adai::run_cli(argc, argv, std::cout, std::cerr); }
