#include <sbcoinv/cli.hpp>

#include <iostream>

int main(int argc, char** argv) { return sbcoinv::run_cli(argc, argv, std::cout, std::cerr); }
