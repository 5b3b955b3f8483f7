#include <iostream>

#include "pingpong/commands.hpp"

int main(int argc, char** argv) { return pingpong::cli::run(argc, argv, std::cout, std::cerr); }
