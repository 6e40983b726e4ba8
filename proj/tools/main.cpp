#include <iostream>
#include <string>
#include <vector>

#include "morsesusy/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return morsesusy::run_cli(args, std::cout, std::cerr);
}
