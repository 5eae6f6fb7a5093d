// One line per acceptance criterion; exit status 0 iff all pass.

#include <cstdlib>
#include <iostream>

#include "thetanull/cli/selftest.hpp"

int main(int argc, char** argv) {
  thetanull::cli::SelftestFlags flags;
  if (argc > 1) flags.seed = std::strtoull(argv[1], nullptr, 10);
  return thetanull::cli::run_selftest(flags, std::cout, std::cerr);
}
