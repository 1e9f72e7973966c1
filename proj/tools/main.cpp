#include "fibconv/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return fibconv::run(argc, argv, std::cout, std::cerr); }
