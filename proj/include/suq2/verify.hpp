#pragma once

// Named verification checks shared by the CLI and the acceptance suite.

#include <string>
#include <utility>
#include <vector>

namespace suq2 {

struct CheckResult {
  std::string id;
  std::string algebra;
  std::string anchor;
  bool pass = false;
  /// Nonzero residuals, rendered; empty on success.
  std::vector<std::string> residuals;
  /// Extra facts worth reporting, as (key, value) pairs.
  std::vector<std::pair<std::string, std::string>> notes;
};

/// Every check ID in report order.
const std::vector<std::string>& check_ids();
bool is_check_id(const std::string& id);

/// Runs one check with the formal parameter q. Throws std::invalid_argument
/// for an unknown ID.
CheckResult run_check(const std::string& id);

}  // namespace suq2
