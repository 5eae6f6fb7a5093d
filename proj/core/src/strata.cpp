#include "thetanull/strata.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/SVD>

#include "thetanull/covariant.hpp"
#include "thetanull/errors.hpp"
#include "thetanull/summation.hpp"

namespace thetanull {

namespace {

// Per-characteristic work runs on the caller's workers, so each evaluation
// stays single threaded.
EvalOptions inner(const EvalOptions& opts) {
  EvalOptions out = opts;
  out.threads = 1;
  return out;
}

struct Screening {
  std::vector<VanishingChar> vanishing;
  double max_err = 0.0;
};

Screening screen_even_constants(const SiegelPoint& tau, double vanish_tol, const EvalOptions& opts) {
  const auto chars = enumerate_even_chars(tau.genus());
  std::vector<CertifiedValue> values(chars.size());
  const EvalOptions each = inner(opts);
  parallel_for(chars.size(), opts.threads, [&](std::size_t i) { values[i] = theta(tau, chars[i], each); });

  Screening out;
  for (const auto& v : values) out.max_err = std::max(out.max_err, v.err);
  if (!(vanish_tol > out.max_err)) {
    throw Error(ErrorKind::ToleranceBelowCertificate,
                "vanish_tol must exceed the evaluation error " + std::to_string(out.max_err));
  }
  for (std::size_t i = 0; i < chars.size(); ++i) {
    if (values[i].abs() < vanish_tol) out.vanishing.push_back({chars[i], values[i]});
  }
  std::stable_sort(out.vanishing.begin(), out.vanishing.end(),
                   [](const VanishingChar& a, const VanishingChar& b) { return a.value.abs() < b.value.abs(); });
  return out;
}

}  // namespace

std::vector<VanishingChar> vanishing_even_chars(const SiegelPoint& tau, double vanish_tol, const EvalOptions& opts) {
  return screen_even_constants(tau, vanish_tol, opts).vanishing;
}

HessianRank numerical_rank(const ComplexMatrix& hessian, double rank_tol, double rank_floor) {
  Eigen::JacobiSVD<ComplexMatrix> svd(hessian);
  HessianRank out;
  out.singular_values = svd.singularValues();
  const double top = out.singular_values.size() ? out.singular_values(0) : 0.0;
  if (top <= rank_floor) return out;
  for (Eigen::Index i = 0; i < out.singular_values.size(); ++i) {
    if (out.singular_values(i) > rank_tol * top) ++out.rank;
  }
  return out;
}

HessianRank hessian_rank(const SiegelPoint& tau, const Characteristic& ch, double rank_tol, const EvalOptions& opts,
                         double rank_floor) {
  if (!ch.is_even()) throw Error(ErrorKind::BadCharacteristic, "Hessian rank needs an even characteristic");
  return numerical_rank(theta_jet(tau, ch, opts).hess.value, rank_tol, rank_floor);
}

std::string_view to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::NotThetaNull: return "NOT_THETANULL";
    case Verdict::ThetaNullRank4: return "THETANULL_RANK4";
    case Verdict::JacobianThetaNull: return "JACOBIAN_THETANULL";
    case Verdict::ReducibleCandidate: return "REDUCIBLE_CANDIDATE";
  }
  return "UNKNOWN";
}

Verdict genus4_verdict(std::optional<int> min_rank) {
  if (!min_rank) return Verdict::NotThetaNull;
  if (*min_rank >= 4) return Verdict::ThetaNullRank4;
  if (*min_rank == 3) return Verdict::JacobianThetaNull;
  return Verdict::ReducibleCandidate;
}

StrataReport stratum(const SiegelPoint& tau, const StrataOptions& opts) {
  StrataReport report;
  report.genus = tau.genus();

  Screening screening = screen_even_constants(tau, opts.vanish_tol, opts.eval);
  report.vanishing = std::move(screening.vanishing);
  report.max_eval_err = screening.max_err;

  const EvalOptions each = inner(opts.eval);
  std::vector<ThetaJet> jets(report.vanishing.size());
  parallel_for(jets.size(), opts.eval.threads,
               [&](std::size_t i) { jets[i] = theta_jet(tau, report.vanishing[i].ch, each); });

  for (std::size_t i = 0; i < jets.size(); ++i) {
    report.max_eval_err = std::max(report.max_eval_err, jets[i].hess.max_err());
    const HessianRank r = numerical_rank(jets[i].hess.value, opts.rank_tol, opts.rank_floor);
    report.per_char_rank.push_back({report.vanishing[i].ch, r.singular_values, r.rank});
    report.stratum = report.stratum ? std::min(*report.stratum, r.rank) : r.rank;
  }
  if (report.genus == 4) report.verdict_g4 = genus4_verdict(report.stratum);
  return report;
}

TheoremThResult theorem_th_check(const SiegelPoint& tau, const Characteristic& base, int h,
                                 const StrataOptions& opts) {
  const int g = tau.genus();
  if (h < 0 || h > g) throw Error(ErrorKind::BadOrder, "h must lie in 0..g");
  if (base.genus() != g) throw Error(ErrorKind::GenusMismatch, "characteristic genus differs from tau");
  if (!base.is_even()) throw Error(ErrorKind::BadCharacteristic, "base characteristic must be even");

  const EvalOptions each = inner(opts.eval);
  const ThetaJet base_jet = theta_jet(tau, base, each);
  if (!(base_jet.value.abs() < opts.vanish_tol)) {
    throw Error(ErrorKind::NotOnTheta0, "|theta[" + base.to_string() + "]| = " +
                                            std::to_string(base_jet.value.abs()) + " is not below vanish_tol");
  }

  TheoremThResult out;
  out.rank_at_most_h = numerical_rank(base_jet.hess.value, opts.rank_tol, opts.rank_floor).rank <= h;
  if (h == g) {
    // No minors of order g + 1.
    out.minors_vanish = true;
    return out;
  }

  std::vector<Characteristic> aux;
  for (const auto& ch : enumerate_even_chars(g)) {
    if (ch != base) aux.push_back(ch);
  }
  std::vector<CovariantMatrix> cms(aux.size());
  parallel_for(aux.size(), opts.eval.threads, [&](std::size_t i) {
    cms[i] = covariant_matrix(base_jet, base, theta_jet(tau, aux[i], each), aux[i]);
  });

  // One scale for all auxiliary characteristics: an auxiliary theta constant
  // that itself (nearly) vanishes makes its whole covariant matrix negligible,
  // and must not be judged against its own size.
  double scale = 0.0;
  for (const auto& cm : cms) scale = std::max(scale, cm.entries.value.cwiseAbs().maxCoeff());
  const double threshold = opts.rank_tol * std::pow(scale, h + 1);

  out.minors_vanish = true;
  for (const auto& cm : cms) {
    const MinorMatrix minors = b_minors(cm, h + 1);
    for (Eigen::Index i = 0; i < minors.entries.value.size(); ++i) {
      const double magnitude = std::abs(minors.entries.value.data()[i]);
      if (magnitude > std::max(threshold, minors.entries.err.data()[i])) {
        out.minors_vanish = false;
        return out;
      }
    }
  }
  return out;
}

TheoremThResult theorem_th_check(const SiegelPoint& tau, int h, const StrataOptions& opts) {
  return theorem_th_check(tau, Characteristic::zero(tau.genus()), h, opts);
}

NewtonResult find_theta_null(const SiegelPoint& tau0, const Characteristic& ch, int i, int j, double vanish_target,
                             const EvalOptions& opts) {
  const int g = tau0.genus();
  if (i < 0 || j < 0 || i >= g || j >= g) throw Error(ErrorKind::GenusMismatch, "coordinate out of range");
  if (!ch.is_even()) throw Error(ErrorKind::BadCharacteristic, "Newton target must be an even characteristic");

  SiegelPoint tau = tau0;
  for (int it = 0; it <= kNewtonMaxIterations; ++it) {
    const ThetaJet jet = theta_jet(tau, ch, opts);
    const double residual = jet.value.abs();
    if (residual < vanish_target) return {tau, it, residual};
    if (it == kNewtonMaxIterations) break;
    // d theta / d tau_ij with tau_ij = tau_ji moving together.
    const Complex slope = jet.hess.value(i, j) / heat_factor(i, j);
    if (std::abs(slope) < kNewtonMinDerivative) {
      throw Error(ErrorKind::NoConvergence, "d theta / d tau_ij is below " + std::to_string(kNewtonMinDerivative));
    }
    tau = tau.with_entry(i, j, tau(i, j) - jet.value.value / slope);
  }
  throw Error(ErrorKind::NoConvergence,
              "no convergence after " + std::to_string(kNewtonMaxIterations) + " Newton iterations");
}

}  // namespace thetanull
