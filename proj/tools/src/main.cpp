#include <iostream>

#include "manin_cli/cli.hpp"

int main(int argc, char** argv) {
  return manin::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
