#include <iostream>

#include "mfcc_cli/app.hpp"

int main(int argc, char** argv) { return mfcc::cli::run_cli(argc, argv, std::cout, std::cerr); }
