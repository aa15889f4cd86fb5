#include <iostream>

#include "lfree/cli.hpp"

int main(int argc, char** argv) { return lfree::run(argc, argv, std::cout, std::cerr); }
