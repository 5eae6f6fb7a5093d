#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "thetanull/siegel_point.hpp"
#include "thetanull/strata.hpp"

namespace thetanull::cli {

/// Malformed or schema-violating input. The message names the JSON line and
/// column or the offending field.
class DocumentError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct DocumentOptions {
  std::optional<double> target_eps;
  std::optional<double> vanish_tol;
  std::optional<double> rank_tol;

  bool operator==(const DocumentOptions&) const = default;
};

struct InputDocument {
  int genus = 0;
  ComplexMatrix tau;
  DocumentOptions options;

  bool operator==(const InputDocument& o) const {
    return genus == o.genus && options == o.options && tau.rows() == o.tau.rows() && tau.cols() == o.tau.cols() &&
           tau == o.tau;
  }
};

/// Parses {"genus": g, "tau": [[{"re": .., "im": ..}, ..], ..], "options": {..}}.
/// Checks shape and types only; see to_siegel for the mathematical checks.
InputDocument parse_input(std::string_view text);

/// Inverse of parse_input; doubles are written in shortest round-trip form.
std::string serialize_input(const InputDocument& doc);

/// Throws thetanull::Error (NotSymmetric, NotPositiveDefinite, ...).
SiegelPoint to_siegel(const InputDocument& doc);

/// Option values after applying document options and command-line overrides.
struct EffectiveSettings {
  double target_eps = EvalOptions{}.target_eps;
  double vanish_tol = StrataOptions{}.vanish_tol;
  double rank_tol = StrataOptions{}.rank_tol;
};

/// JSON report with a fixed field order, terminated by a newline.
std::string render_report(const InputDocument& doc, const EffectiveSettings& settings, const StrataReport& report);

}  // namespace thetanull::cli
