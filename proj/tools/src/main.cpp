#include <iostream>

#include "elliptica/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  elliptica::cli::Result r = elliptica::cli::run(args);
  std::cout << r.out;
  std::cerr << r.err;
  return r.code;
}
