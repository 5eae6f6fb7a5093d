#include "thetanull/theta.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>

#include "thetanull/errors.hpp"
#include "thetanull/summation.hpp"

namespace thetanull {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kUnitRoundoff = std::numeric_limits<double>::epsilon() / 2;

// Splitting parameters tried by the tail bound: exp(-pi q) is written as
// exp(-pi s q) exp(-pi (1 - s) q) and the second factor summed over all of
// the lattice.
constexpr std::array<double, 12> kSplits = {0.5, 0.6, 0.7, 0.75, 0.8, 0.85, 0.9, 0.93, 0.95, 0.97, 0.98, 0.99};

// Everything about tau and z the lattice sum needs. With x = n + w,
// w = Y^-1 Im z and Y = Im tau, every term has modulus
// exp(pi w^t Y w) exp(-pi x^t Y x).
struct Geometry {
  int g = 0;
  RealMatrix y;
  RealMatrix y_inv;
  // Lower triangular with Y = L^t L, so that row k of L x only involves
  // x_0..x_k and the enumeration can fix x_0 first.
  RealMatrix l;
  RealVector w;
  double lambda_min = 0.0;
  double center_energy = 0.0;
  double w_norm = 0.0;
};

Geometry make_geometry(const SiegelPoint& tau, const ComplexVector& z) {
  Geometry geo;
  geo.g = tau.genus();
  if (z.size() != geo.g) throw Error(ErrorKind::GenusMismatch, "z has the wrong length");
  geo.y = tau.imag();
  const int g = geo.g;

  // Reverse the coordinate order, factor P Y P = C C^t, then L = (P C P)^t.
  RealMatrix rev(g, g);
  for (int i = 0; i < g; ++i)
    for (int j = 0; j < g; ++j) rev(i, j) = geo.y(g - 1 - i, g - 1 - j);
  Eigen::LLT<RealMatrix> llt(rev);
  if (llt.info() != Eigen::Success) {
    throw Error(ErrorKind::NotPositiveDefinite, "imaginary part is not positive definite");
  }
  const RealMatrix c = llt.matrixL();
  geo.l.resize(g, g);
  for (int i = 0; i < g; ++i)
    for (int j = 0; j < g; ++j) geo.l(i, j) = c(g - 1 - j, g - 1 - i);

  geo.y_inv = geo.y.llt().solve(RealMatrix::Identity(g, g));
  geo.w = geo.y_inv * z.imag();
  geo.center_energy = geo.w.dot(geo.y * geo.w);
  geo.w_norm = geo.w.norm();
  Eigen::SelfAdjointEigenSolver<RealMatrix> es(geo.y, Eigen::EigenvaluesOnly);
  geo.lambda_min = es.eigenvalues()(0);
  if (!(geo.lambda_min > 0.0)) {
    throw Error(ErrorKind::NotPositiveDefinite, "imaginary part is not positive definite");
  }
  return geo;
}

// Bound on sum over {x : x^t Y x > q_cut} of (2 pi |n|)^k |term|, using
// x^t Y x >= lambda |x|^2, |n| <= |x| + |w|, and
// sum_{k in Z} exp(-a (k + c)^2) <= 1 + sqrt(pi / a).
double log_tail_bound(const Geometry& geo, double q_cut, int k) {
  double best = std::numeric_limits<double>::infinity();
  for (double s : kSplits) {
    // (sqrt(q/lambda) + |w|)^k exp(-pi s q) is decreasing beyond this point.
    if (q_cut < k / (2.0 * kPi * s)) continue;
    double log_b = kPi * geo.center_energy - kPi * s * q_cut;
    if (k > 0) {
      log_b += k * std::log(2.0 * kPi * (std::sqrt(q_cut / geo.lambda_min) + geo.w_norm));
    }
    log_b += geo.g * std::log1p(1.0 / std::sqrt((1.0 - s) * geo.lambda_min));
    best = std::min(best, log_b);
  }
  return best;
}

double tail_bound_q(const Geometry& geo, double q_cut, JetOrder order) {
  double worst = -std::numeric_limits<double>::infinity();
  for (int k = 0; k <= static_cast<int>(order); ++k) worst = std::max(worst, log_tail_bound(geo, q_cut, k));
  return std::exp(worst);
}

void check_box(const Geometry& geo, double q_cut, int max_coord) {
  for (int i = 0; i < geo.g; ++i) {
    const double half_width = std::sqrt(q_cut * geo.y_inv(i, i));
    if (half_width + std::abs(geo.w(i)) + 0.5 > max_coord) {
      throw Error(ErrorKind::TargetUnreachable,
                  "lattice box exceeds |m_i| <= " + std::to_string(max_coord));
    }
  }
}

// Smallest cut (in units of x^t Y x) meeting the target.
double choose_cut(const Geometry& geo, double target_eps, JetOrder order, int max_coord) {
  if (!(target_eps > 0.0)) throw Error(ErrorKind::TargetUnreachable, "target_eps must be positive");
  constexpr double kCutCeiling = 1e8;
  double hi = 1.0;
  while (tail_bound_q(geo, hi, order) > target_eps) {
    hi *= 2.0;
    if (hi > kCutCeiling) throw Error(ErrorKind::TargetUnreachable, "tail bound does not reach target");
  }
  double lo = 0.0;
  for (int it = 0; it < 60 && hi - lo > 1e-9 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (tail_bound_q(geo, mid, order) <= target_eps) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  check_box(geo, hi, max_coord);
  return hi;
}

// Partial sums of one slice (fixed m_0) of the lattice, in lexicographic order.
struct SlicePartial {
  ComplexNeumaierSum value;
  std::vector<ComplexNeumaierSum> first;   // sum n_i T
  std::vector<ComplexNeumaierSum> second;  // sum n_i n_j T, i <= j packed
  double abs_value = 0.0;
};

std::size_t packed_index(int i, int j, int g) {
  // row-major upper triangle, i <= j
  return static_cast<std::size_t>(i * g - i * (i - 1) / 2 + (j - i));
}

class LatticeSum {
 public:
  LatticeSum(const SiegelPoint& tau, const ComplexVector& z, const Characteristic& ch, const Geometry& geo,
             double q_cut, JetOrder order)
      : tau_(tau.matrix()), z_(z), ch_(ch), geo_(geo), q_cut_(q_cut * (1.0 + 1e-12) + 1e-300), order_(order) {
    const int g = geo_.g;
    half_eps_.resize(g);
    for (int i = 0; i < g; ++i) half_eps_(i) = 0.5 * ch_.eps(i);
    eps_dot_delta_ = 0;
    for (int i = 0; i < g; ++i) eps_dot_delta_ += ch_.eps(i) * ch_.delta(i);
  }

  std::vector<long> outer_range() const {
    const double r = std::sqrt(q_cut_) / geo_.l(0, 0);
    const double shift = half_eps_(0) + geo_.w(0);
    std::vector<long> out;
    for (long m = static_cast<long>(std::ceil(-r - shift)); m <= static_cast<long>(std::floor(r - shift)); ++m) {
      out.push_back(m);
    }
    return out;
  }

  SlicePartial slice(long m0) const {
    const int g = geo_.g;
    SlicePartial part;
    if (order_ >= JetOrder::Gradient) part.first.resize(g);
    if (order_ >= JetOrder::Hessian) part.second.resize(static_cast<std::size_t>(g * (g + 1) / 2));
    std::vector<long> m(g, 0);
    RealVector x(g);
    m[0] = m0;
    x(0) = m0 + half_eps_(0) + geo_.w(0);
    const double row0 = geo_.l(0, 0) * x(0);
    recurse(1, row0 * row0, m, x, part);
    return part;
  }

 private:
  void recurse(int level, double energy, std::vector<long>& m, RealVector& x, SlicePartial& part) const {
    const int g = geo_.g;
    if (level == g) {
      if (energy <= q_cut_) add_term(m, part);
      return;
    }
    double c = 0.0;
    for (int j = 0; j < level; ++j) c += geo_.l(level, j) * x(j);
    const double room = q_cut_ - energy;
    if (room < 0.0) return;
    const double r = std::sqrt(room);
    const double lkk = geo_.l(level, level);
    const double shift = half_eps_(level) + geo_.w(level);
    const long lo = static_cast<long>(std::ceil((-c - r) / lkk - shift));
    const long hi = static_cast<long>(std::floor((-c + r) / lkk - shift));
    for (long mk = lo; mk <= hi; ++mk) {
      m[level] = mk;
      x(level) = mk + shift;
      const double row = lkk * x(level) + c;
      recurse(level + 1, energy + row * row, m, x, part);
    }
  }

  void add_term(const std::vector<long>& m, SlicePartial& part) const {
    const int g = geo_.g;
    RealVector n(g);
    for (int i = 0; i < g; ++i) n(i) = m[i] + half_eps_(i);

    // pi i [n^t tau n + 2 n^t z] + pi i n^t delta, the last part kept exact
    // as a power of i.
    Complex quad = 0.0;
    for (int i = 0; i < g; ++i) {
      quad += tau_(i, i) * (n(i) * n(i));
      for (int j = i + 1; j < g; ++j) quad += 2.0 * tau_(i, j) * (n(i) * n(j));
    }
    Complex lin = 0.0;
    for (int i = 0; i < g; ++i) lin += n(i) * z_(i);
    const Complex a = quad + 2.0 * lin;
    const double modulus = std::exp(-kPi * a.imag());
    Complex t = std::polar(modulus, kPi * a.real());

    long k = eps_dot_delta_;
    for (int i = 0; i < g; ++i) k += 2 * m[i] * ch_.delta(i);
    switch (((k % 4) + 4) % 4) {
      case 1: t = Complex(-t.imag(), t.real()); break;
      case 2: t = -t; break;
      case 3: t = Complex(t.imag(), -t.real()); break;
      default: break;
    }

    part.value.add(t);
    const double weight = modulus * (4.0 + kPi * std::abs(a));
    part.abs_value += weight;
    if (order_ >= JetOrder::Gradient) {
      for (int i = 0; i < g; ++i) part.first[i].add(n(i) * t);
    }
    if (order_ >= JetOrder::Hessian) {
      for (int i = 0; i < g; ++i)
        for (int j = i; j < g; ++j) part.second[packed_index(i, j, g)].add((n(i) * n(j)) * t);
    }
  }

  const ComplexMatrix& tau_;
  const ComplexVector& z_;
  Characteristic ch_;
  const Geometry& geo_;
  double q_cut_;
  JetOrder order_;
  RealVector half_eps_;
  long eps_dot_delta_ = 0;
};

void check_inputs(const SiegelPoint& tau, const Characteristic& ch) {
  if (ch.genus() != tau.genus()) throw Error(ErrorKind::GenusMismatch, "characteristic genus differs from tau");
}

ThetaJet evaluate(const SiegelPoint& tau, const ComplexVector& z, const Characteristic& ch,
                  const EvalOptions& opts, JetOrder order) {
  check_inputs(tau, ch);
  const Geometry geo = make_geometry(tau, z);
  const int g = geo.g;
  const double q_cut = choose_cut(geo, opts.target_eps, order, opts.max_coord);

  const LatticeSum sum(tau, z, ch, geo, q_cut, order);
  const std::vector<long> slices = sum.outer_range();
  std::vector<SlicePartial> partials(slices.size());
  parallel_for(slices.size(), opts.threads, [&](std::size_t i) { partials[i] = sum.slice(slices[i]); });

  // Slice totals are folded in slice order, independent of the schedule.
  ComplexNeumaierSum value;
  std::vector<ComplexNeumaierSum> first(order >= JetOrder::Gradient ? g : 0);
  std::vector<ComplexNeumaierSum> second(order >= JetOrder::Hessian ? g * (g + 1) / 2 : 0);
  double abs_value = 0.0;
  for (const auto& p : partials) {
    value.add(p.value.result());
    for (std::size_t i = 0; i < first.size(); ++i) first[i].add(p.first[i].result());
    for (std::size_t i = 0; i < second.size(); ++i) second[i].add(p.second[i].result());
    abs_value += p.abs_value;
  }

  ThetaJet jet;
  jet.value = {value.result(), std::exp(log_tail_bound(geo, q_cut, 0)), kUnitRoundoff * abs_value};
  if (order >= JetOrder::Gradient) {
    const Complex factor(0.0, 2.0 * kPi);
    const double err = std::exp(log_tail_bound(geo, q_cut, 1));
    jet.grad.value.resize(g);
    jet.grad.err = RealVector::Constant(g, err);
    for (int i = 0; i < g; ++i) jet.grad.value(i) = factor * first[i].result();
  }
  if (order >= JetOrder::Hessian) {
    const double factor = -4.0 * kPi * kPi;
    const double err = std::exp(log_tail_bound(geo, q_cut, 2));
    jet.hess.value.resize(g, g);
    jet.hess.err = RealMatrix::Constant(g, g, err);
    for (int i = 0; i < g; ++i) {
      for (int j = i; j < g; ++j) {
        const Complex h = factor * second[packed_index(i, j, g)].result();
        jet.hess.value(i, j) = h;
        jet.hess.value(j, i) = h;
      }
    }
  }
  return jet;
}

}  // namespace

Truncation truncation_radius(const SiegelPoint& tau, const ComplexVector& z, double target_eps, JetOrder order,
                             int max_coord) {
  const Geometry geo = make_geometry(tau, z);
  const double q_cut = choose_cut(geo, target_eps, order, max_coord);
  return {std::sqrt(kPi * q_cut), tail_bound_q(geo, q_cut, order)};
}

double tail_bound(const SiegelPoint& tau, const ComplexVector& z, double radius, JetOrder order) {
  const Geometry geo = make_geometry(tau, z);
  return tail_bound_q(geo, radius * radius / kPi, order);
}

CertifiedValue theta(const SiegelPoint& tau, const ComplexVector& z, const Characteristic& ch,
                     const EvalOptions& opts) {
  return evaluate(tau, z, ch, opts, JetOrder::Value).value;
}

CertifiedValue theta(const SiegelPoint& tau, const Characteristic& ch, const EvalOptions& opts) {
  return theta(tau, ComplexVector::Zero(tau.genus()), ch, opts);
}

ThetaJet theta_jet(const SiegelPoint& tau, const ComplexVector& z, const Characteristic& ch,
                   const EvalOptions& opts) {
  return evaluate(tau, z, ch, opts, JetOrder::Hessian);
}

ThetaJet theta_jet(const SiegelPoint& tau, const Characteristic& ch, const EvalOptions& opts) {
  return theta_jet(tau, ComplexVector::Zero(tau.genus()), ch, opts);
}

Complex heat_factor(int i, int j) { return Complex(0.0, 2.0 * kPi * (i == j ? 2.0 : 1.0)); }

CertifiedMatrix dtheta_dtau(const ThetaJet& jet) {
  const auto g = jet.hess.rows();
  CertifiedMatrix out{ComplexMatrix(g, g), RealMatrix(g, g)};
  for (Eigen::Index i = 0; i < g; ++i) {
    for (Eigen::Index j = 0; j < g; ++j) {
      const Complex f = heat_factor(static_cast<int>(i), static_cast<int>(j));
      out.value(i, j) = jet.hess.value(i, j) / f;
      out.err(i, j) = jet.hess.err(i, j) / std::abs(f);
    }
  }
  return out;
}

CertifiedMatrix dtheta_dtau(const SiegelPoint& tau, const Characteristic& ch, const EvalOptions& opts) {
  return dtheta_dtau(theta_jet(tau, ch, opts));
}

Complex shift_factor(const SiegelPoint& tau, const ComplexVector& z, const Characteristic& ch) {
  const int g = tau.genus();
  ComplexVector half_eps(g), eps(g), half_delta(g);
  for (int i = 0; i < g; ++i) {
    half_eps(i) = 0.5 * ch.eps(i);
    eps(i) = ch.eps(i);
    half_delta(i) = 0.5 * ch.delta(i);
  }
  const Complex quad = (half_eps.transpose() * tau.matrix() * half_eps)(0, 0);
  const Complex lin = (eps.transpose() * (z + half_delta))(0, 0);
  return std::exp(Complex(0.0, kPi) * (-quad - lin));
}

ShiftResidual shift_identity_residual(const SiegelPoint& tau, const ComplexVector& z, const Characteristic& ch,
                                      const EvalOptions& opts) {
  check_inputs(tau, ch);
  const ComplexVector shifted = z + point_of_order_two(tau, ch).coords;
  const Complex k = shift_factor(tau, z, ch);
  const CertifiedValue lhs = theta(tau, shifted, Characteristic::zero(tau.genus()), opts);
  // The factor can be large; tighten the right side so k * err stays at target.
  EvalOptions rhs_opts = opts;
  rhs_opts.target_eps = opts.target_eps / std::max(1.0, std::abs(k));
  const CertifiedValue rhs = theta(tau, z, ch, rhs_opts);
  return {std::abs(lhs.value - k * rhs.value), lhs.err + std::abs(k) * rhs.err};
}

}  // namespace thetanull
