#include <iostream>
#include <string>
#include <vector>

#include "tdloco/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return tdloco::cli::run(args, std::cout, std::cerr);
}
