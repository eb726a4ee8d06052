#include <iostream>

#include "dunkl/experiments.hpp"

int main(int argc, char** argv) {
  return dunkl::experiments::run_cli(argc, argv, std::cout, std::cerr);
}
