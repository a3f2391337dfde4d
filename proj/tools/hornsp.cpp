#include <iostream>
#include <string>
#include <vector>

#include "hornsp/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return hornsp::cli::run(args, std::cout, std::cerr);
}
