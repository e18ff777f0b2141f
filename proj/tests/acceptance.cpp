// One PASS/FAIL line per acceptance criterion; exit status 0 iff all pass.
#include <cstdio>

#include "hnp/selftest.hpp"

int main() {
  int failed = 0;
  for (const auto& c : hnp::acceptance_criteria()) {
    auto r = hnp::run_criterion(c);
    std::printf("%s [%s] %s (%.2fs%s) %s\n", r.pass ? "PASS" : "FAIL", r.id.c_str(), r.name.c_str(), r.seconds,
                r.limit_seconds > 0 ? (", limit " + std::to_string(static_cast<int>(r.limit_seconds)) + "s").c_str() : "",
                r.detail.c_str());
    std::fflush(stdout);
    failed += r.pass ? 0 : 1;
  }
  return failed == 0 ? 0 : 1;
}
