#include <cstdlib>
#include <iostream>

#include "basilica/selftest.hpp"

int main() {
  auto results = basilica::run_acceptance(&std::cerr);
  bool ok = basilica::report_acceptance(results, std::cout, false);
  return ok ? EXIT_SUCCESS : EXIT_FAILURE;
}
