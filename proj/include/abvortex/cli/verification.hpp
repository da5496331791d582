#pragma once

#include <string>
#include <vector>

namespace abvortex::cli {

struct CheckResult {
  std::string name;
  bool passed = false;
  double measured = 0.0;
  double tolerance = 0.0;
  std::string detail;
};

/// Invariant and oracle suite behind `verify`. `report_path` is the committed
/// reconciliation report; a missing or stale report fails its check.
std::vector<CheckResult> run_verification(const std::string& report_path);

/// Regenerates the reconciliation report at `path`.
void write_report(const std::string& path);

}  // namespace abvortex::cli
