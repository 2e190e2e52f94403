#include <iostream>
#include <string>
#include <vector>

#include "teichcurve/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return teichcurve::cli::run(args, std::cout, std::cerr);
}
