#include <iostream>

#include "schubert/cli.hpp"

int main(int argc, char** argv) {
  return schubert::run_cli(argc, argv, std::cout, std::cerr);
}
