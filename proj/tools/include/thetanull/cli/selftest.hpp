#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace thetanull::cli {

inline constexpr std::uint64_t kDefaultSeed = 20240607;

struct SelftestFlags {
  std::uint64_t seed = kDefaultSeed;
  /// Substring of a criterion key; empty selects all.
  std::string filter;
  int threads = 1;
};

struct CriterionInfo {
  int id;
  const char* key;
  const char* title;
};

/// The acceptance criteria in order.
const std::vector<CriterionInfo>& criteria();

struct CriterionResult {
  int id = 0;
  std::string key;
  bool pass = false;
  /// Deterministic summary of the measured quantities.
  std::string detail;
  double seconds = 0.0;
};

/// Runs the selected criteria. Timings go to `log` only, so the results are a
/// function of the flags alone.
std::vector<CriterionResult> run_criteria(const SelftestFlags& flags, std::ostream* log = nullptr);

/// Prints one line per criterion to `out` and a summary; returns 0 iff all
/// selected criteria pass, 2 if the filter selects nothing.
int run_selftest(const SelftestFlags& flags, std::ostream& out, std::ostream& err);

}  // namespace thetanull::cli
