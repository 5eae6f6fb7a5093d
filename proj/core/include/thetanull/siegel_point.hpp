#pragma once

#include <complex>

#include <Eigen/Core>

#include "thetanull/characteristic.hpp"

namespace thetanull {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

/// A point tau of the Siegel upper half-space: a symmetric complex g x g
/// matrix whose imaginary part is positive definite. Instances are immutable
/// and always exactly symmetric.
class SiegelPoint {
 public:
  /// Relative asymmetry accepted (and averaged away) by validate().
  static constexpr double kSymmetryTolerance = 1e-12;

  /// Symmetrizes `raw` and checks Im(raw) > 0 by Cholesky factorization.
  /// Throws NotSymmetric / NotPositiveDefinite / GenusMismatch.
  static SiegelPoint validate(int genus, const ComplexMatrix& raw);

  int genus() const noexcept { return static_cast<int>(tau_.rows()); }
  const ComplexMatrix& matrix() const noexcept { return tau_; }
  Complex operator()(int i, int j) const { return tau_(i, j); }
  RealMatrix imag() const { return tau_.imag(); }
  RealMatrix real() const { return tau_.real(); }

  /// Copy with tau_ij = tau_ji = value, re-validated (LeftSiegelSpace if Im
  /// stops being positive definite).
  SiegelPoint with_entry(int i, int j, Complex value) const;

 private:
  explicit SiegelPoint(ComplexMatrix tau) : tau_(std::move(tau)) {}
  friend SiegelPoint make_siegel_unchecked_symmetry(ComplexMatrix);

  ComplexMatrix tau_;
};

/// Symmetrizes without the asymmetry check, still verifying Im > 0. Used for
/// matrices produced by exact group actions where asymmetry is round-off.
SiegelPoint make_siegel_unchecked_symmetry(ComplexMatrix raw);

inline SiegelPoint validate_siegel(int genus, const ComplexMatrix& raw) {
  return SiegelPoint::validate(genus, raw);
}

/// diag(t1, t2) of genus g1 + g2.
SiegelPoint block_diag(const SiegelPoint& t1, const SiegelPoint& t2);

/// A point of order two, tau * eps/2 + delta/2.
struct HalfPeriod {
  ComplexVector coords;
};

HalfPeriod point_of_order_two(const SiegelPoint& tau, const Characteristic& ch);

/// Smallest eigenvalue of Im(tau).
double min_imag_eigenvalue(const SiegelPoint& tau);

}  // namespace thetanull
