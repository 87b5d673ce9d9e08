#include <iostream>

#include "sgtool/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return sgtool::run(args, std::cout, std::cerr);
}
