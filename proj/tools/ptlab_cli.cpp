#include <iostream>
#include <string>
#include <vector>

#include "ptlab/cli.hpp"

int main(int argc, char** argv) {
  return ptlab::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
