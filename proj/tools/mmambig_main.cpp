#include <iostream>
#include <string>
#include <vector>

#include "mmambig/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return mmambig::run_cli(args, std::cout, std::cerr);
}
