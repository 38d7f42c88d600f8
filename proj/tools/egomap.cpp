#include <iostream>
#include <string>
#include <vector>

#include "egomap/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return egomap::cli_dispatch(args, std::cout, std::cerr);
}
