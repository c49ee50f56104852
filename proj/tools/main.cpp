#include <iostream>
#include <string>
#include <vector>

#include "gcum/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return gcum::run(args, std::cout, std::cerr);
}
