#include <iostream>
#include <vector>

#include "mockrank/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return mockrank::run_cli(args, std::cout, std::cerr);
}
