#include <iostream>

#include "meshrdh/commands.hpp"

int main(int argc, char** argv) { return meshrdh::cli::run(argc, argv, std::cout, std::cerr); }
