#include <iostream>
#include <string>
#include <vector>

#include "sforest/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return sforest::run(args, std::cout, std::cerr);
}
