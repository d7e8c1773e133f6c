#include <iostream>

#include "algebroid/cli.hpp"

int main(int argc, char** argv) { return algebroid::run_cli(argc, argv, std::cout, std::cerr); }
