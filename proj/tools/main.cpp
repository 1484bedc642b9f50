#include <iostream>

#include "fraclangevin/commands.hpp"

int main(int argc, char** argv) {
  return fraclangevin::cli::run(argc, argv, std::cout, std::cerr);
}
