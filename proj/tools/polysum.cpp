#include "polysum/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  const polysum::cli::Result res = polysum::cli::run(args);
  std::cout << res.out;
  std::cerr << res.err;
  return res.exit_code;
}
