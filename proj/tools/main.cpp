#include <iostream>

#include "expasym/cli/cli.hpp"

int main(int argc, char** argv) {
  return expasym::run_cli(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
