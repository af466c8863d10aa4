#include <iostream>
#include <string>
#include <vector>

#include "padw/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return padw::cli::run(args, std::cout, std::cerr);
}
