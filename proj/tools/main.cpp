#include <iostream>

#include "pexc/cli.hpp"

int main(int argc, char** argv) { return pexc::cli::run(argc, argv, std::cout, std::cerr); }
