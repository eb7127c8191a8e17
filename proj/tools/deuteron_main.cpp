#include "deuteron/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return deuteron::cli::run(argc, argv, std::cout, std::cerr); }
