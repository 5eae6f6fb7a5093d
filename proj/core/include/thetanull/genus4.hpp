#pragma once

#include <array>
#include <vector>

#include "thetanull/certified.hpp"
#include "thetanull/local_poly.hpp"
#include "thetanull/siegel_point.hpp"
#include "thetanull/theta.hpp"

namespace thetanull {

/// Local equation of the genus-4 Jacobian locus near a diagonal period
/// matrix, in the coordinates x1..x6 = 2 pi i tau_ij ordered
/// (12), (34), (13), (24), (14), (23):
///   P = (x1 x2 - x3 x4)^2 (x5 x6)^2 - 2 (x1 x2 + x3 x4) x1 x2 x3 x4 x5 x6
///       + (x1 x2 x3 x4)^2.
LocalPoly build_p();

/// (x3 x4 x5 x6)^2, the restriction of P to {x1 = 0}.
LocalPoly p_restricted_to_x1_zero();

/// Exact coefficientwise comparison of P|_{x1 = 0} against (x3 x4 x5 x6)^2.
bool substitution_identity_check();

/// The weight-12 cusp form q prod_{n >= 1} (1 - q^n)^24, q = exp(2 pi i omega),
/// normalized with leading coefficient 1. Throws TargetUnreachable for
/// Im omega < 0.02.
CertifiedValue delta_cusp(Complex omega, double target_eps = 1e-15);

inline constexpr double kMinCuspImag = 0.02;

/// Coefficients of q^1 .. q^count of the same product, exactly.
std::vector<BigInt> delta_q_expansion(int count);

/// 2^16 delta(omega_1) delta(omega_2) delta(omega_3) delta(omega_4).
CertifiedValue local_coefficient(const std::array<Complex, 4>& omegas, double target_eps = 1e-15);

/// | |theta'[1,1](omega, 0)| - pi |theta_00 theta_01 theta_10 (omega)| |.
double jacobi_derivative_residual(Complex omega, const EvalOptions& opts = {});

}  // namespace thetanull
