#include <iostream>

#include "cycaut_cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return cycaut::cli::run_cli(args, std::cout, std::cerr);
}
