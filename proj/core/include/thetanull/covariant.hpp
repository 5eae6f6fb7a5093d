#pragma once

#include <vector>

#include "thetanull/certified.hpp"
#include "thetanull/characteristic.hpp"
#include "thetanull/siegel_point.hpp"
#include "thetanull/theta.hpp"

namespace thetanull {

/// The operator D has d/d tau_ii on the diagonal and (1/2) d/d tau_ij off it.
/// Combined with the heat equation, (D theta)_ij = hess_ij / (4 pi i) for
/// every entry.
Complex d_operator_factor();

/// The covariant matrix written as (1 + delta_ij)[theta_b d theta_a / d tau_ij
/// - ...] is this many times the D-normalized one used here, globally. Minors of
/// order h scale by its h-th power and F by its g-th power.
inline constexpr double kDisplayNormalization = 2.0;

/// D applied to the theta constant theta[ch](tau).
CertifiedMatrix d_apply(const SiegelPoint& tau, const Characteristic& ch, const EvalOptions& opts = {});
CertifiedMatrix d_apply(const ThetaJet& jet);

/// theta_aux D theta_base - theta_base D theta_aux. With base = 0 this is
/// theta[eps,delta]^2 D(theta_00 / theta[eps,delta]).
struct CovariantMatrix {
  CertifiedMatrix entries;
  Characteristic base;
  Characteristic aux;

  int genus() const { return static_cast<int>(entries.rows()); }
};

/// Throws BadCharacteristic unless aux is even and aux != 0.
CovariantMatrix covariant_matrix(const SiegelPoint& tau, const Characteristic& aux, const EvalOptions& opts = {});

/// Pair form: base takes the role of theta_00. Both even, distinct.
CovariantMatrix covariant_matrix(const SiegelPoint& tau, const Characteristic& base, const Characteristic& aux,
                                 const EvalOptions& opts = {});

/// From precomputed jets at z = 0.
CovariantMatrix covariant_matrix(const ThetaJet& base_jet, const Characteristic& base, const ThetaJet& aux_jet,
                                 const Characteristic& aux);

/// All h-element subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<int>> lexicographic_subsets(int n, int h);

/// The C(g,h) x C(g,h) matrix of h x h minors, rows and columns indexed by
/// lexicographic h-subsets.
struct MinorMatrix {
  int h = 0;
  std::vector<std::vector<int>> subsets;
  CertifiedMatrix entries;
};

/// `m` must be symmetric; only minors (I, J) with I <= J are computed. Throws
/// BadOrder unless 1 <= h <= g.
MinorMatrix b_minors(const CertifiedMatrix& m, int h);
inline MinorMatrix b_minors(const CovariantMatrix& cm, int h) { return b_minors(cm.entries, h); }

/// Fraction-free (Bareiss) elimination with partial pivoting.
Complex bareiss_determinant(ComplexMatrix m);

/// Determinant with a Hadamard-type bound propagated from the entry errors:
/// |det(A + E) - det A| <= prod_j (|a_j| + |e_j|) - prod_j |a_j| over columns.
CertifiedValue determinant(const CertifiedMatrix& m);

/// F(tau) = theta_aux^(2g) det D(theta_00 / theta_aux), evaluated
/// division-free as det(covariant_matrix).
CertifiedValue f_form(const SiegelPoint& tau, const Characteristic& aux, const EvalOptions& opts = {});
CertifiedValue f_form(const SiegelPoint& tau, const Characteristic& base, const Characteristic& aux,
                      const EvalOptions& opts = {});

}  // namespace thetanull
