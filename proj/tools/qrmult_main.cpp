#include <iostream>

#include "qrmult/cli.hpp"

int main(int argc, char** argv) {
  return qrmult::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
