#pragma once

#include <functional>
#include <string>
#include <vector>

namespace hnp {

struct Check {
  std::string id;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
  double limit_seconds = 0;  // 0 = no limit
};

struct Criterion {
  std::string id;
  std::string name;
  double limit_seconds;
  std::function<bool(std::string& detail)> body;
};

// Runs a criterion, turning exceptions and time overruns into failures.
Check run_criterion(const Criterion& c);

// Invariant checks on every catalog group of order <= 16.
std::vector<Criterion> quick_criteria();
// The eleven end-to-end acceptance criteria.
std::vector<Criterion> acceptance_criteria();

}  // namespace hnp
