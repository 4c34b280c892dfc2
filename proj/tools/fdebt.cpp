#include <iostream>
#include <string>
#include <vector>

#include "fdebt/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return fdebt::run_cli(args, std::cout, std::cerr);
}
