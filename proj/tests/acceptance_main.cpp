// Acceptance gate: one pass/fail line per criterion; nonzero exit when any
// criterion fails.

#include <iostream>

#include "resurgence/acceptance.hpp"

int main() {
  int failures = resurgence::run_acceptance_suite(std::cout);
  if (failures > 0) {
    std::cout << failures << " criterion(s) failed\n";
    return 1;
  }
  std::cout << "all criteria passed\n";
  return 0;
}
