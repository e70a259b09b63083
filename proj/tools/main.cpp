#include "supernomial/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
  return supernomial::run_cli(argc, argv, std::cout, std::cerr);
}
