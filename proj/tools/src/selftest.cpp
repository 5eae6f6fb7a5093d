#include "thetanull/cli/selftest.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <optional>
#include <ostream>
#include <set>

#include <Eigen/LU>

#include "thetanull/characteristic.hpp"
#include "thetanull/cli/sampling.hpp"
#include "thetanull/covariant.hpp"
#include "thetanull/errors.hpp"
#include "thetanull/genus4.hpp"
#include "thetanull/strata.hpp"
#include "thetanull/symplectic.hpp"
#include "thetanull/theta.hpp"

namespace thetanull::cli {

namespace {

constexpr Complex kI{0.0, 1.0};
constexpr double kPi = std::numbers::pi;

struct Outcome {
  bool pass = true;
  std::string detail;
};

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2e", x);
  return buf;
}

EvalOptions eval_options(const SelftestFlags& flags, double target_eps = EvalOptions{}.target_eps) {
  EvalOptions o;
  o.target_eps = target_eps;
  o.threads = flags.threads;
  return o;
}

double relative(Complex a, Complex b) { return std::abs(a - b) / std::abs(b); }

// 1 -------------------------------------------------------------------------

Outcome odd_vanishing(Sampler& s, const SelftestFlags& flags) {
  const EvalOptions opts = eval_options(flags);
  Outcome out;
  double max_value = 0.0;
  double max_err = 0.0;
  int count = 0;
  for (int g = 1; g <= 4; ++g) {
    const auto odd = enumerate_odd_chars(g);
    for (int k = 0; k < 20; ++k) {
      const SiegelPoint tau = s.tau(g);
      for (const auto& ch : odd) {
        const CertifiedValue v = theta(tau, ch, opts);
        max_value = std::max(max_value, v.abs());
        max_err = std::max(max_err, v.err);
        if (!(v.abs() <= v.err && v.err <= 1e-12)) out.pass = false;
        ++count;
      }
    }
  }
  out.detail = std::to_string(count) + " odd constants, max |theta| " + sci(max_value) + ", max err " + sci(max_err);
  return out;
}

// 2 -------------------------------------------------------------------------

Complex central_difference(const SiegelPoint& tau, const Characteristic& ch, int i, int j, const EvalOptions& opts) {
  constexpr double h = 1e-5;
  const CertifiedValue plus = theta(tau.with_entry(i, j, tau(i, j) + h), ch, opts);
  const CertifiedValue minus = theta(tau.with_entry(i, j, tau(i, j) - h), ch, opts);
  return (plus.value - minus.value) / (2.0 * h);
}

Outcome heat_equation(Sampler& s, const SelftestFlags& flags) {
  const EvalOptions opts = eval_options(flags, 1e-15);
  Outcome out;
  double worst = 0.0;
  int entries = 0;
  for (int g = 1; g <= 4; ++g) {
    const auto even = enumerate_even_chars(g);
    for (int k = 0; k < 10; ++k) {
      const SiegelPoint tau = s.shallow_tau(g);
      for (const auto& ch : even) {
        const CertifiedMatrix analytic = dtheta_dtau(tau, ch, opts);
        for (int i = 0; i < g; ++i) {
          for (int j = i; j < g; ++j) {
            const double rel = relative(central_difference(tau, ch, i, j, opts), analytic.value(i, j));
            worst = std::max(worst, rel);
            ++entries;
          }
        }
      }
    }
  }
  out.pass = worst < 1e-6;
  out.detail = std::to_string(entries) + " entries, max relative error " + sci(worst);
  return out;
}

// 3 -------------------------------------------------------------------------

Outcome shift_formula(Sampler& s, const SelftestFlags& flags) {
  const EvalOptions opts = eval_options(flags);
  double worst_oracle = 0.0;
  double worst_library = 0.0;
  for (int g = 2; g <= 3; ++g) {
    for (int k = 0; k < 10; ++k) {
      const SiegelPoint tau = s.tau(g);
      // Values grow like exp(2 pi |eps . Im z|) and the residual is absolute.
      const ComplexVector z = s.z(g, 0.25);
      for (const auto& ch : enumerate_even_chars(g)) {
        RealVector eps(g), delta(g);
        for (int i = 0; i < g; ++i) {
          eps(i) = ch.eps(i);
          delta(i) = ch.delta(i);
        }
        const ComplexVector e = eps.cast<Complex>();
        const ComplexVector d = delta.cast<Complex>();
        // theta_00(z + tau eps/2 + delta/2) = exp(pi i (-eps tau eps / 4 - eps.z - eps.delta / 2)) theta[eps, delta](z)
        const Complex exponent =
            kI * kPi * (-(e.transpose() * tau.matrix() * e)(0) / 4.0 - e.dot(z) - e.dot(d) / 2.0);
        const Complex factor = std::exp(exponent);
        EvalOptions tight = opts;
        tight.target_eps = opts.target_eps / std::max(1.0, std::abs(factor));
        const ComplexVector shifted = z + tau.matrix() * e / 2.0 + d / 2.0;
        const Complex lhs = theta(tau, shifted, Characteristic::zero(g), opts).value;
        const Complex rhs = factor * theta(tau, z, ch, tight).value;
        worst_oracle = std::max(worst_oracle, std::abs(lhs - rhs));
        worst_library = std::max(worst_library, shift_identity_residual(tau, z, ch, opts).residual);
      }
    }
  }
  Outcome out;
  out.pass = worst_oracle < 1e-10 && worst_library < 1e-10;
  out.detail = "max residual " + sci(worst_oracle) + " (oracle factor), " + sci(worst_library) + " (library)";
  return out;
}

std::vector<Characteristic> all_chars(int g) {
  auto out = enumerate_even_chars(g);
  const auto odd = enumerate_odd_chars(g);
  out.insert(out.end(), odd.begin(), odd.end());
  return out;
}

// 4 -------------------------------------------------------------------------

Outcome block_factorization(Sampler& s, const SelftestFlags& flags) {
  const EvalOptions opts = eval_options(flags);
  constexpr int kSplits[4][2] = {{1, 1}, {1, 2}, {2, 2}, {1, 3}};
  Outcome out;
  double worst_ratio = 0.0;
  int count = 0;
  for (int k = 0; k < 20; ++k) {
    const int g1 = kSplits[k % 4][0];
    const int g2 = kSplits[k % 4][1];
    const SiegelPoint t1 = s.tau(g1);
    const SiegelPoint t2 = s.tau(g2);
    const SiegelPoint block = block_diag(t1, t2);
    for (const auto& c1 : all_chars(g1)) {
      const CertifiedValue v1 = theta(t1, c1, opts);
      for (const auto& c2 : all_chars(g2)) {
        const CertifiedValue joint = theta(block, c1.concat(c2), opts);
        const CertifiedValue product = v1 * theta(t2, c2, opts);
        const double err = std::max(joint.err, product.err);
        const double diff = std::abs(joint.value - product.value);
        if (!(diff <= 3.0 * err)) out.pass = false;
        worst_ratio = std::max(worst_ratio, diff / err);
        ++count;
      }
    }
  }
  out.detail = std::to_string(count) + " products, max |difference| / err " + sci(worst_ratio);
  return out;
}

// 5 -------------------------------------------------------------------------

ComplexMatrix to_complex(const IntMatrix& m) { return m.cast<double>().cast<Complex>(); }

Outcome squared_modularity(Sampler& s, const SelftestFlags& flags) {
  // Level-(4, 8) images sit close to the real boundary, so the lattice box is
  // wider than the default cap.
  EvalOptions opts = eval_options(flags);
  opts.max_coord = 4000;
  Outcome out;
  double worst_theta = 0.0;
  double worst_f = 0.0;
  for (int g = 1; g <= 3; ++g) {
    const auto even = enumerate_even_chars(g);
    for (int k = 0; k < 10; ++k) {
      SymplecticMatrix m = level_48_generator(s, g);
      if (s.integer(0, 1)) m = m * level_48_generator(s, g);
      if (!in_level_subgroup(m, 4, true)) out.pass = false;

      const SiegelPoint tau = s.shallow_tau(g);
      const SiegelPoint image = symplectic_action(m, tau);
      const Complex j = (to_complex(m.c()) * tau.matrix() + to_complex(m.d())).determinant();
      for (const auto& ch : even) {
        const Complex lhs = std::pow(theta(image, ch, opts).value, 2);
        const Complex rhs = j * std::pow(theta(tau, ch, opts).value, 2);
        worst_theta = std::max(worst_theta, relative(lhs, rhs));
      }
      if (g >= 1 && even.size() > 1) {
        for (int a = 0; a < 2; ++a) {
          const Characteristic& aux = even[1 + s.integer(0, static_cast<int>(even.size()) - 2)];
          const Complex lhs = f_form(image, aux, opts).value;
          const Complex rhs = std::pow(j, g + 2) * f_form(tau, aux, opts).value;
          worst_f = std::max(worst_f, relative(lhs, rhs));
        }
      }
    }
  }
  out.pass = out.pass && worst_theta < 1e-8 && worst_f < 1e-7;
  out.detail = "max relative error " + sci(worst_theta) + " (theta^2), " + sci(worst_f) + " (F)";
  return out;
}

// 6 -------------------------------------------------------------------------

Outcome jacobi_derivative(Sampler& s, const SelftestFlags& flags) {
  const EvalOptions opts = eval_options(flags);
  double worst = 0.0;
  for (int k = 0; k < 20; ++k) worst = std::max(worst, jacobi_derivative_residual(s.upper(0.5, 2.0), opts));
  return {worst < 1e-10, "max residual " + sci(worst)};
}

// 7 -------------------------------------------------------------------------

SiegelPoint block_point(Sampler& s, int split) {
  return block_diag(s.tau(split), s.tau(4 - split));
}

Outcome reducible_rank_drop(Sampler& s, const SelftestFlags& flags) {
  StrataOptions opts;
  opts.eval = eval_options(flags);
  Outcome out;
  double worst_s3 = 0.0;
  double least_s2 = 1.0;
  int failures = 0;
  for (int k = 0; k < 50; ++k) {
    const StrataReport report = stratum(block_point(s, 1 + k % 3), opts);
    bool ok = report.stratum == 2 && report.verdict_g4 == Verdict::ReducibleCandidate;
    for (const CharRank& r : report.per_char_rank) {
      if (r.rank != *report.stratum) continue;
      const auto& sv = r.singular_values;
      worst_s3 = std::max(worst_s3, sv(2) / sv(0));
      least_s2 = std::min(least_s2, sv(1) / sv(0));
      ok = ok && sv(2) / sv(0) < 1e-8 && sv(1) / sv(0) > 1e-3;
    }
    if (!ok) ++failures;
  }
  out.pass = failures == 0;
  out.detail = std::to_string(50 - failures) + "/50 rank 2 and REDUCIBLE_CANDIDATE, max s3/s1 " + sci(worst_s3) +
               ", min s2/s1 " + sci(least_s2);
  return out;
}

// 8, 9 ----------------------------------------------------------------------

struct NewtonPoint {
  SiegelPoint tau;
  Characteristic ch;
};

// Starts from diag(tau1, tau2) with the vanishing characteristic odd + odd,
// perturbs off-block entries and walks back onto the divisor along tau_{0,g-1}.
// With a single perturbed entry the walk returns to the reducible locus.
std::optional<NewtonPoint> newton_point(Sampler& s, int g, bool single_entry, const EvalOptions& opts) {
  const SiegelPoint t1 = s.tau(1);
  const SiegelPoint t2 = s.tau(g - 1);
  const auto odd2 = enumerate_odd_chars(g - 1);
  const Characteristic ch =
      Characteristic::parse("1/1").concat(odd2[s.integer(0, static_cast<int>(odd2.size()) - 1)]);
  ComplexMatrix m = block_diag(t1, t2).matrix();
  for (int j = 1; j < g; ++j) {
    if (single_entry && j != g - 1) continue;
    m(0, j) = m(j, 0) = Complex(s.uniform(-0.15, 0.15), s.uniform(-0.15, 0.15));
  }
  try {
    const NewtonResult r = find_theta_null(SiegelPoint::validate(g, m), ch, 0, g - 1, 1e-13, opts);
    return NewtonPoint{r.tau, ch};
  } catch (const Error&) {
    return std::nullopt;
  }
}

NewtonPoint require_newton_point(Sampler& s, int g, bool single_entry, const EvalOptions& opts) {
  for (int attempt = 0; attempt < 20; ++attempt) {
    if (auto p = newton_point(s, g, single_entry, opts)) return *p;
  }
  throw Error(ErrorKind::NoConvergence, "no Newton start converged");
}

Outcome theorem_th(Sampler& s, const SelftestFlags& flags) {
  StrataOptions opts;
  opts.eval = eval_options(flags);
  struct Plan {
    int g;
    bool single_entry;
    int count;
  };
  constexpr Plan kPlans[] = {{2, false, 8}, {3, false, 6}, {3, true, 6}};
  Outcome out;
  int agree_low = 0;   // rank <= h and all minors vanish
  int agree_high = 0;  // rank > h and some minor survives
  int disagree = 0;
  for (const Plan& plan : kPlans) {
    for (int k = 0; k < plan.count; ++k) {
      const NewtonPoint p = require_newton_point(s, plan.g, plan.single_entry, opts.eval);
      for (int h = 0; h < plan.g; ++h) {
        const TheoremThResult r = theorem_th_check(p.tau, p.ch, h, opts);
        if (!r.holds()) {
          ++disagree;
        } else if (r.rank_at_most_h) {
          ++agree_low;
        } else {
          ++agree_high;
        }
      }
    }
  }
  out.pass = disagree == 0 && agree_low > 0 && agree_high > 0;
  out.detail = "20 points, " + std::to_string(agree_low) + " (rank <= h, minors vanish) + " +
               std::to_string(agree_high) + " (rank > h, minor survives), " + std::to_string(disagree) +
               " disagreements";
  return out;
}

// d q / d tau_ij by the trapezoidal rule on a circle, tau_ij = tau_ji moving together.
Complex contour_derivative(const std::function<Complex(const SiegelPoint&)>& q, const SiegelPoint& tau, int i,
                           int j) {
  constexpr int kNodes = 24;
  constexpr double kRadius = 0.04;
  Complex sum = 0.0;
  for (int k = 0; k < kNodes; ++k) {
    const Complex w = std::polar(1.0, 2.0 * kPi * k / kNodes);
    sum += q(tau.with_entry(i, j, tau(i, j) + kRadius * w)) / w;
  }
  return sum / (kNodes * kRadius);
}

Outcome lemma_lm(Sampler& s, const SelftestFlags& flags) {
  const EvalOptions opts = eval_options(flags, 1e-15);
  Outcome out;
  double worst = 0.0;
  double max_theta = 0.0;
  for (int k = 0; k < 10; ++k) {
    const int g = k < 5 ? 2 : 3;
    const NewtonPoint p = require_newton_point(s, g, false, opts);
    const ThetaJet base = theta_jet(p.tau, p.ch, opts);
    max_theta = std::max(max_theta, base.value.abs());
    if (!(base.value.abs() < 1e-12)) out.pass = false;
    const Complex det_d = determinant(d_apply(base)).value;

    std::vector<Characteristic> aux;
    for (const auto& ch : enumerate_even_chars(g)) {
      if (ch != p.ch) aux.push_back(ch);
    }
    for (int a = 0; a < 3; ++a) {
      const Characteristic ch = aux[s.integer(0, static_cast<int>(aux.size()) - 1)];
      const auto quotient = [&](const SiegelPoint& t) {
        return theta(t, p.ch, opts).value / theta(t, ch, opts).value;
      };
      // F = theta_aux^(2g) det D(theta_base / theta_aux), derivatives by contour integrals.
      ComplexMatrix dq(g, g);
      for (int i = 0; i < g; ++i) {
        for (int j = i; j < g; ++j) {
          dq(i, j) = dq(j, i) = contour_derivative(quotient, p.tau, i, j) * (i == j ? 1.0 : 0.5);
        }
      }
      const Complex theta_aux = theta(p.tau, ch, opts).value;
      const Complex f = std::pow(theta_aux, 2 * g) * dq.determinant();
      const Complex rhs = std::pow(theta_aux, g) * det_d;
      worst = std::max(worst, std::abs(f - rhs) / std::max(1.0, std::abs(f)));
    }
  }
  out.pass = out.pass && worst < 1e-9;
  out.detail = "max |theta| " + sci(max_theta) + ", max |F - theta^g det D theta| / max(1, |F|) " + sci(worst);
  return out;
}

// 10 ------------------------------------------------------------------------

LocalPoly square_of_product(std::initializer_list<int> vars) {
  LocalPoly::Exponents e{};
  for (int v : vars) e[v] = 2;
  return LocalPoly::monomial(e, 1);
}

Outcome p_identities(Sampler&, const SelftestFlags&) {
  const LocalPoly p = build_p();
  const bool x1 = substitution_identity_check();
  const bool x2 = p.substitute(1, 0) == square_of_product({2, 3, 4, 5});
  const bool x3 = p.substitute(2, 0) == square_of_product({0, 1, 4, 5});
  const bool x4 = p.substitute(3, 0) == square_of_product({0, 1, 4, 5});
  const bool at_ones = p.evaluate({1, 1, 1, 1, 1, 1}) == -3;
  const bool shape = p.total_degree() == 8 && p.is_homogeneous(8);
  const bool swaps = p.permute({1, 0, 3, 2, 5, 4}) == p && p.permute({2, 3, 0, 1, 4, 5}) == p;
  Outcome out;
  out.pass = x1 && x2 && x3 && x4 && at_ones && shape && swaps;
  auto yn = [](bool b) { return b ? std::string("ok") : std::string("FAILED"); };
  out.detail = "x1:=0 " + yn(x1) + ", x2:=0 " + yn(x2) + ", x3:=0 " + yn(x3) + ", x4:=0 " + yn(x4) + ", P(1..1) " +
               yn(at_ones) + ", degree " + yn(shape) + ", symmetries " + yn(swaps) + "; " +
               std::to_string(p.terms().size()) + " terms";
  return out;
}

// 11 ------------------------------------------------------------------------

// (E4^3 - E6^2) / 1728 from divisor sums.
std::vector<BigInt> delta_from_eisenstein(int count) {
  const int n = count + 1;
  std::vector<BigInt> e4(n, 0), e6(n, 0);
  e4[0] = e6[0] = 1;
  for (int k = 1; k < n; ++k) {
    BigInt s3 = 0, s5 = 0;
    for (int d = 1; d <= k; ++d) {
      if (k % d) continue;
      s3 += boost::multiprecision::pow(BigInt(d), 3);
      s5 += boost::multiprecision::pow(BigInt(d), 5);
    }
    e4[k] = 240 * s3;
    e6[k] = -504 * s5;
  }
  auto mul = [n](const std::vector<BigInt>& a, const std::vector<BigInt>& b) {
    std::vector<BigInt> c(n, 0);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; i + j < n; ++j) c[i + j] += a[i] * b[j];
    }
    return c;
  };
  const auto e4c = mul(mul(e4, e4), e4);
  const auto e6s = mul(e6, e6);
  std::vector<BigInt> out;
  for (int k = 1; k < n; ++k) out.push_back((e4c[k] - e6s[k]) / 1728);
  return out;
}

Outcome delta_covariance(Sampler& s, const SelftestFlags&) {
  constexpr double kTarget = 1e-22;
  double worst_s = 0.0;
  double worst_t = 0.0;
  for (int k = 0; k < 20; ++k) {
    const Complex w = s.upper(0.5, 2.0);
    const Complex d = delta_cusp(w, kTarget).value;
    worst_s = std::max(worst_s, relative(delta_cusp(-1.0 / w, kTarget).value, std::pow(w, 12) * d));
    worst_t = std::max(worst_t, relative(delta_cusp(w + 1.0, kTarget).value, d));
  }
  const auto series = delta_q_expansion(4);
  const auto oracle = delta_from_eisenstein(4);
  const std::vector<BigInt> expected = {1, -24, 252, -1472};
  const bool coefficients = series == oracle && oracle == expected;
  Outcome out;
  out.pass = worst_s < 1e-9 && worst_t < 1e-9 && coefficients;
  out.detail = "max relative error " + sci(worst_s) + " (omega -> -1/omega), " + sci(worst_t) +
               " (omega -> omega + 1); q-coefficients " + (coefficients ? "1, -24, 252, -1472" : "MISMATCH");
  return out;
}

// 12 ------------------------------------------------------------------------

SymplecticMatrix random_generator(Sampler& s, int g) {
  switch (s.integer(0, 2)) {
    case 0:
      return SymplecticMatrix::inversion(g);
    case 1: {
      IntMatrix b(g, g);
      for (int i = 0; i < g; ++i) {
        for (int j = i; j < g; ++j) b(i, j) = b(j, i) = s.integer(-1, 1);
      }
      return SymplecticMatrix::translation(b);
    }
    default: {
      const int i = s.integer(0, g - 1);
      const int j = (i + s.integer(1, g - 1)) % g;
      IntMatrix u = IntMatrix::Identity(g, g);
      IntMatrix u_inv = IntMatrix::Identity(g, g);
      u(i, j) = 1;
      u_inv(i, j) = -1;
      return SymplecticMatrix::change_of_basis(u, u_inv);
    }
  }
}

Outcome symplectic_invariance(Sampler& s, const SelftestFlags& flags) {
  StrataOptions opts;
  opts.eval = eval_options(flags);
  int matches = 0;
  for (int k = 0; k < 10; ++k) {
    const SiegelPoint tau = block_point(s, 1 + k % 3);
    SymplecticMatrix m = random_generator(s, 4);
    const int length = s.integer(1, 3);
    for (int w = 1; w < length; ++w) m = m * random_generator(s, 4);

    const StrataReport before = stratum(tau, opts);
    const StrataReport after = stratum(symplectic_action(m, tau), opts);
    std::set<Characteristic> moved, found;
    for (const auto& v : before.vanishing) moved.insert(char_action(m, v.ch));
    for (const auto& v : after.vanishing) found.insert(v.ch);
    if (before.stratum == after.stratum && moved == found) ++matches;
  }
  return {matches == 10, std::to_string(matches) + "/10 pairs with equal stratum and corresponding characteristics"};
}

struct Entry {
  CriterionInfo info;
  Outcome (*run)(Sampler&, const SelftestFlags&);
  double max_seconds;
};

const std::vector<Entry>& entries() {
  static const std::vector<Entry> kEntries = {
      {{1, "odd-vanishing", "odd theta constants vanish within err"}, odd_vanishing, 60.0},
      {{2, "heat-equation", "dtheta/dtau against central differences"}, heat_equation, 300.0},
      {{3, "shift-formula", "half-period shift identity"}, shift_formula, 0.0},
      {{4, "block-factorization", "theta of block-diagonal tau factorizes"}, block_factorization, 0.0},
      {{5, "squared-modularity", "theta^2 and F under Gamma_g(4,8)"}, squared_modularity, 0.0},
      {{6, "jacobi-derivative", "Jacobi derivative formula at genus 1"}, jacobi_derivative, 0.0},
      {{7, "reducible-rank-drop", "block-diagonal genus-4 points have rank 2"}, reducible_rank_drop, 0.0},
      {{8, "theorem-th", "rank <= h iff order h+1 minors vanish"}, theorem_th, 0.0},
      {{9, "lemma-lm", "F on the divisor equals theta^g det D theta"}, lemma_lm, 0.0},
      {{10, "p-identities", "exact identities of P(X)"}, p_identities, 1.0},
      {{11, "delta-covariance", "weight-12 covariance and q-expansion of delta"}, delta_covariance, 0.0},
      {{12, "symplectic-stratum", "stratum is Sp(2g, Z)-invariant"}, symplectic_invariance, 0.0},
  };
  return kEntries;
}

}  // namespace

const std::vector<CriterionInfo>& criteria() {
  static const std::vector<CriterionInfo> kInfo = [] {
    std::vector<CriterionInfo> out;
    for (const auto& e : entries()) out.push_back(e.info);
    return out;
  }();
  return kInfo;
}

std::vector<CriterionResult> run_criteria(const SelftestFlags& flags, std::ostream* log) {
  std::vector<CriterionResult> results;
  for (const Entry& e : entries()) {
    if (!flags.filter.empty() && std::string(e.info.key).find(flags.filter) == std::string::npos) continue;
    // Each criterion draws from its own stream, so filtering does not shift the draws.
    Sampler sampler(flags.seed * 1000003ULL + static_cast<std::uint64_t>(e.info.id));
    CriterionResult r;
    r.id = e.info.id;
    r.key = e.info.key;
    const auto start = std::chrono::steady_clock::now();
    try {
      const Outcome o = e.run(sampler, flags);
      r.pass = o.pass;
      r.detail = o.detail;
    } catch (const std::exception& ex) {
      r.pass = false;
      r.detail = std::string("exception: ") + ex.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (e.max_seconds > 0.0 && r.seconds >= e.max_seconds) {
      r.pass = false;
      r.detail += "; exceeded time limit of " + std::to_string(static_cast<int>(e.max_seconds)) + " s";
    }
    if (log) *log << "criterion " << r.id << " (" << r.key << "): " << r.seconds << " s\n";
    results.push_back(std::move(r));
  }
  return results;
}

int run_selftest(const SelftestFlags& flags, std::ostream& out, std::ostream& err) {
  const auto results = run_criteria(flags, &err);
  if (results.empty()) {
    err << "no criterion matches filter '" << flags.filter << "'\n";
    return 2;
  }
  int passed = 0;
  for (const auto& r : results) {
    char head[48];
    std::snprintf(head, sizeof head, "%s %2d %-20s ", r.pass ? "PASS" : "FAIL", r.id, r.key.c_str());
    out << head << r.detail << "\n";
    passed += r.pass ? 1 : 0;
  }
  out << passed << "/" << results.size() << " criteria passed (seed " << flags.seed << ")\n";
  return passed == static_cast<int>(results.size()) ? 0 : 1;
}

}  // namespace thetanull::cli
