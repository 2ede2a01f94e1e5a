#include <iostream>

#include "mechsynth/cli.hpp"

int main(int argc, char** argv) {
  return mechsynth::cli::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
