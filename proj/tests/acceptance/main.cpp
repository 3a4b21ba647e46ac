// Runs every acceptance criterion at its stated parameters and prints one line each.
// Optional arguments restrict the run to the given criterion numbers.

#include <cstdlib>
#include <iostream>

#include "criteria.hpp"

int main(int argc, char** argv) {
  qlk::acceptance::Options opt;
  for (int i = 1; i < argc; ++i) opt.only.push_back(std::atoi(argv[i]));
  bool ok = true;
  qlk::acceptance::run_all(opt, [&](const qlk::acceptance::Result& r) {
    std::cout << qlk::acceptance::format_line(r) << std::endl;
    ok = ok && r.pass;
  });
  return ok ? 0 : 1;
}
