#include <iostream>

#include "convexity/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return convexity::run_cli(args, std::cout, std::cerr);
}
