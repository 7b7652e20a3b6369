#include <iostream>

#include "grasscos_cli/cli.hpp"

int main(int argc, char** argv) {
  return grasscos::cli::cli_main(argc, argv, std::cout, std::cerr);
}
