#include <iostream>
#include <string>
#include <vector>

#include "blackwell/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return blackwell::run_command(args, std::cout, std::cerr);
}
