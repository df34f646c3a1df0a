#include <iostream>

#include "hocat/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return hocat::run_cli(args, std::cout, std::cerr);
}
