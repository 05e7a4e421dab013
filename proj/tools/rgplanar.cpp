#include <iostream>

#include "rgplanar/cli.hpp"

int main(int argc, char** argv) { return rgp::run_cli(argc, argv, std::cout, std::cerr); }
