#pragma once

#include <iosfwd>
#include <string>

namespace czeta::acceptance {

inline constexpr int kCriterionCount = 9;

struct Outcome {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;  // deterministic: no timings
};

/// Runs criterion id in [1, 9].
Outcome run_criterion(int id);

/// One line per criterion: "PASS <id> <title>: <detail>" or "FAIL ...".
std::string format_outcome(const Outcome& outcome);

/// Runs the suite in order and writes one line per criterion to out.
/// Returns the number of failures. With stop_at_first_failure the run ends
/// after the first FAIL line.
int run_suite(std::ostream& out, bool stop_at_first_failure);

}  // namespace czeta::acceptance
