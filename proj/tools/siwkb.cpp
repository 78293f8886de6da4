#include <iostream>

#include "siwkb/cli.hpp"

int main(int argc, char** argv) { return siwkb::cli::run(argc, argv, std::cout, std::cerr); }
