#include <iostream>

#include "parastat/cli.hpp"

int main(int argc, char** argv) { return parastat::cli::run(argc, argv, std::cout, std::cerr); }
