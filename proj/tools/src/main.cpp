#include <iostream>

#include "hexbubble_cli/app.hpp"

int main(int argc, char** argv) { return hexbubble::cli::run(argc, argv, std::cout, std::cerr); }
