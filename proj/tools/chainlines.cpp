#include <chainlines/cli.hpp>

#include <iostream>

int main(int argc, char** argv) { return chainlines::cli::run(argc, argv, std::cout, std::cerr); }
