#include <iostream>
#include <string>
#include <vector>

#include "signstab/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return signstab::run(args, std::cout, std::cerr);
}
