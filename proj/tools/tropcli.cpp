#include <iostream>

#include "trop/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return trop::run_cli(args, std::cout, std::cerr);
}
