#pragma once

#include <string>

#include "hnp/io.hpp"

namespace hnp {

// verb is one of sha, scan-reps, dset, classify, witness, selftest.
// options hold the verb's flags by long name (without dashes).
struct Command {
  std::string verb;
  json options = json::object();
};

struct CommandResult {
  json report;
  int exit_code = 0;
};

// 0 ok, 1 hypothesis violated, 2 budget exceeded, 3 parse/schema error.
int exit_code_for(ErrorKind k);

// Never throws; errors land in report["error"] with the mapped exit code.
CommandResult run(const Command& cmd);

// Report with every "seconds" field removed, the part covered by report_digest.
json strip_timing(const json& report);

}  // namespace hnp
