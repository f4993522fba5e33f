#pragma once

#include <string>
#include <vector>

#include "ihara/geodesics.hpp"
#include "ihara/graph.hpp"

namespace ihara {

// The cross-checking suite behind `ihara verify`. Each entry exercises one
// identity or bound; entries whose preconditions the graph does not meet are
// reported as skipped, not failed, so the suite is runnable on any input.
enum class CheckStatus { pass, fail, skip };

std::string to_string(CheckStatus status);

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::skip;
  std::string detail;
};

struct VerificationReport {
  std::string graph_name;
  long order = 0;
  std::vector<CheckResult> checks;
  bool all_pass = true;  // no failed entries (skips allowed)
};

VerificationReport run_verification(const Graph& g, long order,
                                    const OracleLimits& limits = {});

}  // namespace ihara
