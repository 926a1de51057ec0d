#include <iostream>

#include "cyclotorsion/cli.hpp"

int main(int argc, char** argv) {
  return cyclotorsion::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
