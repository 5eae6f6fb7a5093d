#pragma once

#include <cstdint>

#include <Eigen/Core>

#include "thetanull/characteristic.hpp"
#include "thetanull/siegel_point.hpp"

namespace thetanull {

using IntMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;

/// An element M = (a b; c d) of Sp(2g, Z) with exact integer blocks. The
/// relations a d^t - b c^t = 1, a b^t = b a^t and c d^t = d c^t are checked
/// exactly on construction.
class SymplecticMatrix {
 public:
  SymplecticMatrix(IntMatrix a, IntMatrix b, IntMatrix c, IntMatrix d);

  static SymplecticMatrix identity(int genus);
  /// (0 -1; 1 0)
  static SymplecticMatrix inversion(int genus);
  /// (1 s; 0 1) for integer symmetric s.
  static SymplecticMatrix translation(const IntMatrix& s);
  /// (1 0; s 1) for integer symmetric s.
  static SymplecticMatrix lower_translation(const IntMatrix& s);
  /// (u 0; 0 u^-t) for u in GL(g, Z) with |det u| = 1; `u_inv` must be its inverse.
  static SymplecticMatrix change_of_basis(const IntMatrix& u, const IntMatrix& u_inv);

  int genus() const noexcept { return static_cast<int>(a_.rows()); }
  const IntMatrix& a() const noexcept { return a_; }
  const IntMatrix& b() const noexcept { return b_; }
  const IntMatrix& c() const noexcept { return c_; }
  const IntMatrix& d() const noexcept { return d_; }

  SymplecticMatrix operator*(const SymplecticMatrix& rhs) const;
  /// Exact inverse (d^t -b^t; -c^t a^t).
  SymplecticMatrix inverse() const;
  bool operator==(const SymplecticMatrix& other) const;

 private:
  IntMatrix a_, b_, c_, d_;
};

/// Condition number of c tau + d above which the action is refused.
inline constexpr double kMaxCocycleCondition = 1e14;

/// M o tau = (a tau + b)(c tau + d)^-1. Throws SingularCocycle when c tau + d
/// is numerically singular.
SiegelPoint symplectic_action(const SymplecticMatrix& m, const SiegelPoint& tau);

/// c tau + d.
ComplexMatrix cocycle(const SymplecticMatrix& m, const SiegelPoint& tau);

/// The affine action on characteristics,
///   (eps; delta) -> (d -c; -b a)(eps; delta) + (diag(c d^t); diag(a b^t)) mod 2.
Characteristic char_action(const SymplecticMatrix& m, const Characteristic& ch);

/// Membership in Gamma_g(n), or in Gamma_g(n, 2n) when `tight` is set.
bool in_level_subgroup(const SymplecticMatrix& m, int n, bool tight);

}  // namespace thetanull
