#include <iostream>

#include "safecol/cli.hpp"

int main(int argc, char** argv) {
  return safecol::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
