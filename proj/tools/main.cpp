#include <iostream>

#include "pcmrank/cli.hpp"

int main(int argc, char** argv) {
  return pcmrank::run_cli(argc, argv, std::cout, std::cerr);
}
