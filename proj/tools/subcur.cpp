#include <iostream>
#include <string>
#include <vector>

#include "subset_currents/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return subset_currents::dispatch(args, std::cout, std::cerr);
}
