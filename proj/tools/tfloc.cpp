#include <iostream>

#include "tfloc/cli.hpp"

int main(int argc, char** argv) { return tfloc::cli::run(argc, argv, std::cout, std::cerr); }
