#include <iostream>

#include "folsem/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return folsem::run_cli(args, std::cout, std::cerr);
}
