#include "cli.hpp"

#include <cstdlib>
#include <iostream>

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  std::optional<std::string> width_env;
  if (const char* w = std::getenv("NEFSLOPE_WIDTH")) width_env = w;
  return nefslope::cli::run(args, std::cout, std::cerr, width_env);
}
