#include <iostream>
#include <string>
#include <vector>

#include "critlab/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return critlab::run_cli(args, std::cout, std::cerr);
}
