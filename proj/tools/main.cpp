#include <iostream>
#include <string>
#include <vector>

#include "sphere_chroma/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return sphere_chroma::cli::run(args, std::cin, std::cout, std::cerr);
}
