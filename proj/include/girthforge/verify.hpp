#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace girthforge {

/// fast covers everything provable in minutes (orders up to 8); full adds the
/// order-9 exact computation and the order-10/11 witness searches.
enum class Tier { fast, full };

Tier tier_from_name(const std::string& name);
std::string to_string(Tier tier);

struct CriterionResult {
  std::string id;        // "1".."8", "9a".."9f"
  std::string label;
  std::string expected;
  std::string computed;
  bool pass = false;
  double seconds = 0;
};

/// Runs the verification battery for the tier, streaming one row per
/// criterion to `progress` (when given) as it completes.
std::vector<CriterionResult> run_acceptance(Tier tier, int workers, std::ostream* progress);

bool all_passed(const std::vector<CriterionResult>& results);

}  // namespace girthforge
