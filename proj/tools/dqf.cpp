#include <iostream>
#include <string>
#include <vector>

#include "dqf/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return dqf::run_cli(args, std::cout, std::cerr);
}
