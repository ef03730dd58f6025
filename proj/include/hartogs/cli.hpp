#pragma once

#include <string>
#include <vector>

#include "hartogs/report.hpp"

namespace hartogs {

/// Exit codes: 0 success, 2 parse/semantic error, 3 unsupported
/// classification, 4 cross-check failure, 1 anything else.
struct RunResult {
  int exit_code = 0;
  Json doc;          // machine-readable document (schema_version "1")
  std::string text;  // human-readable rendering
};

RunResult run(const std::vector<std::string>& args);

}  // namespace hartogs
