#include <cstdlib>
#include <iostream>

#include "cli_commands.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  std::optional<std::string> env_tol;
  if (const char* v = std::getenv("INCONIC_TOL")) env_tol = v;
  return inconic::cli::run(args, std::cout, std::cerr, env_tol);
}
