#include <unistd.h>

#include <cstdlib>
#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);
  const bool color = ::isatty(STDOUT_FILENO) != 0 &&
                     std::getenv("NO_COLOR") == nullptr;
  return btcprof::cli::run(argc, argv,
                           {std::cin, std::cout, std::cerr, color});
}
