#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
  return euler_adic::cli::run(argc, argv, std::cout, std::cerr);
}
