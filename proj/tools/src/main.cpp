#include <iostream>
#include <string>
#include <vector>

#include "vdkernel_cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return vdkernel::cli::run(args, std::cout, std::cerr);
}
