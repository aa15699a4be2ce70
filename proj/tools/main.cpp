#include <iostream>
#include <string>
#include <vector>

#include "wittorders_tools/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return wittorders::cli::run(args, std::cout, std::cerr);
}
