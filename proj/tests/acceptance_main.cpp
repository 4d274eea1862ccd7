#include <iostream>

#include "edgepoly/acceptance.hpp"

int main() {
  int failed = 0;
  edgepoly::run_reproduction_suite([&](const edgepoly::CriterionOutcome& o) {
    std::cout << edgepoly::format_outcome(o) << std::endl;
    failed += !o.passed;
  });
  std::cout << (failed ? std::to_string(failed) + " criteria failed" : "all criteria passed")
            << std::endl;
  return failed ? 1 : 0;
}
