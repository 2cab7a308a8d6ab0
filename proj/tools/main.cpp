#include <iostream>

#include "mst/cli.hpp"

int main(int argc, char** argv) {
  return mst::run_command(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
