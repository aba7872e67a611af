#include <iostream>
#include <string>
#include <vector>

#include "curvecal/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return curvecal::cli::run(args, std::cout, std::cerr);
}
