#include <iostream>
#include <string>
#include <vector>

#include "schur_ohno/cli.hpp"

int main(int argc, char** argv) {
  return schur_ohno::cli::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
