#pragma once

#include <string>
#include <vector>

namespace gitstrata::cli {

struct Result {
  int exit_code = 0;   // 0 success, 2 invalid input
  std::string out;     // report JSON on success
  std::string err;     // diagnostic naming the offending field on failure
};

/// Runs one CLI command (arguments without the program name). All
/// commands emit a deterministic JSON report on stdout; every failure
/// exits 2 with a diagnostic.
Result run(const std::vector<std::string>& args);

}  // namespace gitstrata::cli
