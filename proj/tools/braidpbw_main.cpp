#include "braidpbw/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return braidpbw::run_cli(argc, argv, std::cout, std::cerr); }
