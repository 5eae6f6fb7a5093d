#pragma once

#include <vector>

#include "thetanull/certified.hpp"
#include "thetanull/characteristic.hpp"
#include "thetanull/siegel_point.hpp"

namespace thetanull {

struct EvalOptions {
  double target_eps = 1e-13;
  /// Largest |m_i| the lattice sum may visit.
  int max_coord = 60;
  /// Workers for the per-slice partial sums. Results are bit-identical for
  /// every value.
  int threads = 1;
};

/// Derivative order a truncation must certify: 0 value, 1 gradient, 2 Hessian.
enum class JetOrder { Value = 0, Gradient = 1, Hessian = 2 };

struct Truncation {
  /// Radius in the norm |x|^2 = pi * x^t Im(tau) x, x = m + eps/2 + Im(tau)^-1 Im(z).
  double radius = 0.0;
  /// Certified bound on the omitted tail for the requested order (max over
  /// orders up to it).
  double bound = 0.0;
};

/// Smallest radius whose tail bound is <= target_eps for every derivative
/// order up to `order`. Throws TargetUnreachable when the enclosing box would
/// leave |m_i| <= max_coord.
Truncation truncation_radius(const SiegelPoint& tau, const ComplexVector& z, double target_eps,
                             JetOrder order = JetOrder::Value, int max_coord = 60);

/// Certified tail bound at a given radius, for derivative order `order`.
double tail_bound(const SiegelPoint& tau, const ComplexVector& z, double radius, JetOrder order);

/// theta[eps, delta](tau, z) by a truncated lattice sum.
CertifiedValue theta(const SiegelPoint& tau, const ComplexVector& z, const Characteristic& ch,
                     const EvalOptions& opts = {});

/// Theta constant, z = 0.
CertifiedValue theta(const SiegelPoint& tau, const Characteristic& ch, const EvalOptions& opts = {});

/// Value, z-gradient and z-Hessian of theta[eps, delta](tau, .) at z.
struct ThetaJet {
  CertifiedValue value;
  CertifiedVector grad;
  /// Exactly symmetric; each unordered pair is summed once.
  CertifiedMatrix hess;
};

ThetaJet theta_jet(const SiegelPoint& tau, const ComplexVector& z, const Characteristic& ch,
                   const EvalOptions& opts = {});

ThetaJet theta_jet(const SiegelPoint& tau, const Characteristic& ch, const EvalOptions& opts = {});

/// Factor in the heat equation d^2 theta / dz_i dz_j = c_ij d theta / d tau_ij,
/// c_ij = 2 pi i (1 + delta_ij), where tau_ij = tau_ji is one coordinate.
Complex heat_factor(int i, int j);

/// d theta / d tau_ij at z = 0 through the heat equation.
CertifiedMatrix dtheta_dtau(const SiegelPoint& tau, const Characteristic& ch, const EvalOptions& opts = {});

/// Same, from an already computed jet.
CertifiedMatrix dtheta_dtau(const ThetaJet& jet);

struct ShiftResidual {
  double residual = 0.0;
  /// Combined truncation bound of both sides.
  double err = 0.0;
};

/// |theta_00(tau, z + tau eps/2 + delta/2) - k theta[eps, delta](tau, z)| with
/// k = exp(pi i (-(eps/2)^t tau (eps/2) - eps^t (z + delta/2))).
ShiftResidual shift_identity_residual(const SiegelPoint& tau, const ComplexVector& z,
                                      const Characteristic& ch, const EvalOptions& opts = {});

/// The multiplier k above.
Complex shift_factor(const SiegelPoint& tau, const ComplexVector& z, const Characteristic& ch);

}  // namespace thetanull
