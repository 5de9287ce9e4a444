#include <iostream>

#include "cacount/cli.hpp"

int main(int argc, char** argv) { return cacount::cli::run(argc, argv, std::cout, std::cerr); }
