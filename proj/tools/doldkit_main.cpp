#include <iostream>
#include <string>
#include <vector>

#include "doldkit/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return doldkit::cli::run(args, std::cin, std::cout, std::cerr);
}
