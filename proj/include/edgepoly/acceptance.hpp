#pragma once

#include <functional>
#include <string>
#include <vector>

#include "edgepoly/lattice.hpp"

namespace edgepoly {

struct CriterionOutcome {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

/// Runs the reproduction suite in order; `on_result` fires after each
/// criterion so callers can stream progress.
std::vector<CriterionOutcome> run_reproduction_suite(
    const std::function<void(const CriterionOutcome&)>& on_result = {},
    std::uint64_t node_cap = kDefaultNodeCap);

/// "PASS  3  title  (0.12 s)  detail"
std::string format_outcome(const CriterionOutcome& outcome);

}  // namespace edgepoly
