#include <iostream>

#include "superdim/cli.hpp"

int main(int argc, char** argv) {
  return superdim::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
