#include <iostream>

#include "ptq/cli.hpp"

int main(int argc, char** argv) { return ptq::cli::main_entry(argc, argv, std::cerr); }
