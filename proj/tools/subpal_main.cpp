#include "cli.hpp"

#include <iostream>
#include <string>
#include <vector>

int main(int argc, char **argv) {
  std::ios::sync_with_stdio(false);
  std::vector<std::string> args(argv, argv + argc);
  return subpal::cli::run_cli(args, std::cin, std::cout, std::cerr);
}
