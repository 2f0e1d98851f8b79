#include <iostream>
#include <string>
#include <vector>

#include "premet_cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return premet::cli::run(args, std::cout, std::cerr);
}
