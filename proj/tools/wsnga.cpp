#include <iostream>

#include "wsnga/cli.hpp"

int main(int argc, char** argv) { return wsnga::cli::cli_main(argc, argv, std::cout, std::cerr); }
