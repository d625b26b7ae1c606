#include <iostream>

#include "secant/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return secant::cli::run(args, std::cout, std::cerr);
}
