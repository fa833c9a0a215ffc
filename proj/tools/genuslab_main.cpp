#include <iostream>
#include <string>
#include <vector>

#include "genuslab/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return genuslab::run_cli(args, std::cout, std::cerr);
}
