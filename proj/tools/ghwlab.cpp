#include <iostream>
#include <string>
#include <vector>

#include "ghwlab/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return ghwlab::cli::run(args, std::cout, std::cerr);
}
