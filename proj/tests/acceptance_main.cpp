// Runs every acceptance criterion and prints one PASS/FAIL line per criterion.
#include <iostream>

#include "czeta/acceptance.hpp"

int main() {
  const int failures = czeta::acceptance::run_suite(std::cout, false);
  std::cout << (failures == 0 ? "all criteria passed" : "some criteria failed") << '\n';
  return failures == 0 ? 0 : 1;
}
