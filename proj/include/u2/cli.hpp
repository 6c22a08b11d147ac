#pragma once

#include <string>
#include <vector>

namespace u2 {

struct CliResult {
  int code = 0;
  std::string out;
};

// Command-line driver, callable in-process for tests. args excludes the
// program name. Exit codes: 0 success (queries and passing validations),
// 1 validation or oracle failure (the report is still printed),
// 2 usage error or malformed input.
CliResult run_cli(const std::vector<std::string>& args);

}  // namespace u2
