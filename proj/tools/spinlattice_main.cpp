#include <iostream>
#include <string>
#include <vector>

#include "spinlattice/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return spinlattice::cli::main_entry(args, std::cout, std::cerr);
}
