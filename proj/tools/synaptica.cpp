#include <synaptica/cli.hpp>

#include <iostream>

int main(int argc, char** argv) { return synaptica::cli::run_cli(argc, argv, std::cout, std::cerr); }
