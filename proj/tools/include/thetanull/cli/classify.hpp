#pragma once

#include <iosfwd>
#include <optional>
#include <string>

namespace thetanull::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitNumerical = 3;

struct ClassifyFlags {
  std::string input_path;
  /// Report goes to `out` when unset.
  std::optional<std::string> out_path;
  std::optional<double> target_eps;
  std::optional<double> vanish_tol;
  std::optional<double> rank_tol;
  int threads = 1;
};

/// Reads the input document, classifies it and writes the report. Returns
/// kExitOk, kExitValidation or kExitNumerical; diagnostics go to `err` and no
/// report is written on failure.
int run_classify(const ClassifyFlags& flags, std::ostream& out, std::ostream& err);

}  // namespace thetanull::cli
