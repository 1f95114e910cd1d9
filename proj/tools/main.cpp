#include <iostream>
#include <vector>

#include "cmreg/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return cmreg::run_cli(args, std::cout, std::cerr);
}
