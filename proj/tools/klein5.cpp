#include <iostream>

#include "klein5/cli.hpp"

int main(int argc, char** argv) { return klein5::cli::run(argc, argv, std::cout, std::cerr); }
