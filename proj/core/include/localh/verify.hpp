#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace localh {

enum class Suite { Tables, Oracles, Series, All };

/// Throws std::invalid_argument for anything other than tables, oracles, series, all.
Suite parse_suite(std::string_view text);

struct VerifyOptions {
  Suite suite = Suite::All;
  /// Upper bound on n / rank for every check. Each check additionally stops
  /// at its own enumeration cap and reports the range it actually covered.
  int max_n = 7;
};

inline constexpr int kMaxVerifyN = 12;

struct CheckResult {
  std::string name;
  std::string anchor;  // the identity being checked, in words
  std::string scope;   // e.g. "n = 2..7"
  bool passed = false;
  std::string detail;  // first mismatch, or empty
  double seconds = 0.0;
};

/// Runs every identity of the selected suite. BudgetExceeded if max_n is
/// above kMaxVerifyN; std::invalid_argument if max_n < 1.
std::vector<CheckResult> run_verification(const VerifyOptions& opts);

}  // namespace localh
