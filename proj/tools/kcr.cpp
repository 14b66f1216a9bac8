#include <iostream>

#include "kcr/cli.hpp"

int main(int argc, char** argv) { return kcr::cli::run(argc, argv, std::cout, std::cerr); }
