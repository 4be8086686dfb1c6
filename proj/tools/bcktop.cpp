#include <iostream>

#include "bcktop/cli.hpp"

int main(int argc, char** argv) { return bcktop::cli::run(argc, argv, std::cout, std::cerr); }
