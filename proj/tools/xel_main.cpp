#include <iostream>
#include <string>
#include <vector>

#include "xel/interface.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return xel::run_cli(args, std::cout, std::cerr);
}
