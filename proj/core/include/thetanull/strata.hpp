#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "thetanull/certified.hpp"
#include "thetanull/characteristic.hpp"
#include "thetanull/siegel_point.hpp"
#include "thetanull/theta.hpp"

namespace thetanull {

struct StrataOptions {
  EvalOptions eval;
  /// |theta| below this counts as a vanishing theta constant.
  double vanish_tol = 1e-10;
  /// Singular values above rank_tol * sigma_1 count towards the rank.
  double rank_tol = 1e-8;
  /// If sigma_1 is at or below this the Hessian is treated as zero.
  double rank_floor = 1e-12;
};

struct VanishingChar {
  Characteristic ch;
  CertifiedValue value;
};

/// Even characteristics with |theta[ch](tau)| < vanish_tol, sorted by modulus
/// (ties in lexicographic order). Throws ToleranceBelowCertificate if
/// vanish_tol does not exceed the largest evaluation error.
std::vector<VanishingChar> vanishing_even_chars(const SiegelPoint& tau, double vanish_tol,
                                                const EvalOptions& opts = {});

struct HessianRank {
  int rank = 0;
  /// Descending.
  RealVector singular_values;
};

/// Numerical rank of a z-Hessian from its singular values.
HessianRank numerical_rank(const ComplexMatrix& hessian, double rank_tol, double rank_floor = 1e-12);

/// Rank of the z-Hessian of theta[ch] at z = 0. Throws BadCharacteristic for
/// odd ch.
HessianRank hessian_rank(const SiegelPoint& tau, const Characteristic& ch, double rank_tol,
                         const EvalOptions& opts = {}, double rank_floor = 1e-12);

enum class Verdict { NotThetaNull, ThetaNullRank4, JacobianThetaNull, ReducibleCandidate };

std::string_view to_string(Verdict v) noexcept;

struct CharRank {
  Characteristic ch;
  RealVector singular_values;
  int rank = 0;
};

struct StrataReport {
  int genus = 0;
  std::vector<VanishingChar> vanishing;
  /// Same order as `vanishing`.
  std::vector<CharRank> per_char_rank;
  /// Minimal rank over vanishing characteristics; empty iff nothing vanishes.
  std::optional<int> stratum;
  /// Only for genus 4.
  std::optional<Verdict> verdict_g4;
  /// Largest truncation error of any theta constant or Hessian entry used.
  double max_eval_err = 0.0;
};

/// Genus-4 mapping from the minimal Hessian rank at a vanishing theta-null.
Verdict genus4_verdict(std::optional<int> min_rank);

StrataReport stratum(const SiegelPoint& tau, const StrataOptions& opts = {});

struct TheoremThResult {
  /// rank of the Hessian of theta[base] at 0 is <= h
  bool rank_at_most_h = false;
  /// every entry of B^(h+1)(base, aux) is negligible, for every even aux != base
  bool minors_vanish = false;

  bool holds() const { return rank_at_most_h == minors_vanish; }
};

/// Evaluates both sides of the set-theoretic description of the rank <= h
/// stratum of {theta[base] = 0} independently. `base` plays the role of the
/// zero characteristic. Throws NotOnTheta0 if |theta[base](tau)| >= vanish_tol,
/// BadOrder unless 0 <= h <= g.
TheoremThResult theorem_th_check(const SiegelPoint& tau, int h, const StrataOptions& opts = {});
TheoremThResult theorem_th_check(const SiegelPoint& tau, const Characteristic& base, int h,
                                 const StrataOptions& opts = {});

struct NewtonResult {
  SiegelPoint tau;
  int iterations = 0;
  double residual = 0.0;
};

inline constexpr int kNewtonMaxIterations = 50;
inline constexpr double kNewtonMinDerivative = 1e-8;

/// Moves the single coordinate tau_ij (= tau_ji) by Newton's method until
/// |theta[ch](tau)| < vanish_target. Throws NoConvergence (including a start
/// derivative below 1e-8) or LeftSiegelSpace.
NewtonResult find_theta_null(const SiegelPoint& tau0, const Characteristic& ch, int i, int j,
                             double vanish_target, const EvalOptions& opts = {});

}  // namespace thetanull
