#include <iostream>

#include "rrgd/cli.hpp"

int main(int argc, char** argv) { return rrgd::run_cli(argc, argv, std::cout, std::cerr); }
