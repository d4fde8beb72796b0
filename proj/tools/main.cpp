#include <iostream>
#include <string>
#include <vector>

#include "fiblucas/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return fiblucas::cli::run(args, std::cout, std::cerr);
}
