#include <iostream>
#include <string>
#include <vector>

#include "evspace/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return evspace::cli::run(args, std::cout, std::cerr);
}
