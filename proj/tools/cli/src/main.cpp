#include <iostream>

#include "qzeta_cli/cli.hpp"

int main(int argc, char** argv) { return qzeta::cli::run_cli(argc, argv, std::cout, std::cerr); }
