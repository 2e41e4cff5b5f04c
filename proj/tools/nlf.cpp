#include <iostream>

#include "nlf/cli.hpp"

int main(int argc, char** argv) { return nlf::cli::run(argc, argv, std::cout, std::cerr); }
