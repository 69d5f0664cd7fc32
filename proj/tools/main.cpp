#include <iostream>
#include <string>
#include <vector>

#include "orlicz_wiener/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv, argv + argc);
  return orlicz_wiener::cli::run(args, std::cout, std::cerr);
}
