#pragma once

#include <cstddef>
#include <functional>
#include <string>

#include "abvortex/cli/config.hpp"
#include "abvortex/cli/table.hpp"

namespace abvortex::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitNumeric = 2,
  kExitVerifyFailed = 3,
};

struct RunOutput {
  ResultTable table;
  int exit_code = kExitOk;
  // Free-form text for subcommands that do not produce a table (verify).
  std::string text;
};

/// Worker cap from AB_VORTEX_THREADS (unset: hardware concurrency). Throws
/// UsageError for a value that is not a positive integer.
std::size_t thread_cap();

/// Runs body(i) for i in [0, n) on up to `threads` workers. Each index is
/// visited exactly once; callers write results by index so output order does
/// not depend on scheduling.
void parallel_for(std::size_t n, std::size_t threads,
                  const std::function<void(std::size_t)>& body);

RunOutput run(const RunConfig& cfg);

/// Renders the table in the configured format.
std::string render(const RunConfig& cfg, const ResultTable& table);

/// Full command-line entry point: parse, run, write. Returns the exit code.
int main_entry(const std::vector<std::string>& args, std::string& out, std::string& err);

}  // namespace abvortex::cli
