#include <iostream>

#include "strateuler/cli.hpp"

int main(int argc, char** argv) {
  return strateuler::run_cli(argc, argv, std::cout, std::cerr);
}
