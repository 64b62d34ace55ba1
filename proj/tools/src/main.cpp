#include <iostream>

#include "tpb_cli/cli.hpp"

int main(int argc, char** argv) { return tpb::cli::run(argc, argv, std::cout, std::cerr); }
