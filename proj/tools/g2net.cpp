#include <iostream>
#include <string>
#include <vector>

#include "g2net/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return g2net::runCli(args, std::cin, std::cout, std::cerr);
}
