#include <iostream>

#include "gpcnd/cli.hpp"

int main(int argc, char** argv) {
  return gpcnd::run_cli(argc, argv, std::cout, std::cerr);
}
