#include <iostream>

#include "tperf/cli.hpp"

int main(int argc, char** argv) { return tperf::run_cli(argc, argv, std::cout, std::cerr); }
