#include <iostream>

#include "srq/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return srq::cli::run(args, std::cout, std::cerr);
}
