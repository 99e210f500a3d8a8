#include <iostream>  // for cout, cerr

#include "cli.hpp"

int main(int argc, char** argv) {
  return semiforge::cli::run(argc, argv, std::cout, std::cerr);
}
