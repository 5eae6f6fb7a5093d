#include "thetanull/genus4.hpp"

#include <cmath>
#include <numbers>

#include "thetanull/errors.hpp"

namespace thetanull {

LocalPoly build_p() {
  const LocalPoly x1 = LocalPoly::var(0), x2 = LocalPoly::var(1), x3 = LocalPoly::var(2);
  const LocalPoly x4 = LocalPoly::var(3), x5 = LocalPoly::var(4), x6 = LocalPoly::var(5);
  const LocalPoly a = x1 * x2;
  const LocalPoly b = x3 * x4;
  const LocalPoly c = x5 * x6;
  return (a - b).pow(2) * c.pow(2) - LocalPoly(2) * (a + b) * a * b * c + (a * b).pow(2);
}

LocalPoly p_restricted_to_x1_zero() {
  return (LocalPoly::var(2) * LocalPoly::var(3) * LocalPoly::var(4) * LocalPoly::var(5)).pow(2);
}

bool substitution_identity_check() { return build_p().substitute(0, 0) == p_restricted_to_x1_zero(); }

CertifiedValue delta_cusp(Complex omega, double target_eps) {
  if (!(omega.imag() >= kMinCuspImag)) {
    throw Error(ErrorKind::TargetUnreachable, "Im omega below " + std::to_string(kMinCuspImag));
  }
  constexpr int kMaxFactors = 100000;
  const Complex q = std::exp(Complex(0.0, 2.0 * std::numbers::pi) * omega);
  const double r = std::abs(q);

  // prod_{n > N} (1 - q^n)^24 lies within exp(T) - 1 of 1, where
  // T = 24 r^(N+1) / ((1 - r)(1 - r^(N+1))).
  Complex eta_part = 1.0;
  Complex qn = 1.0;
  for (int n = 1; n <= kMaxFactors; ++n) {
    qn *= q;
    eta_part *= 1.0 - qn;
    const double r_next = std::abs(qn) * r;
    const double t = 24.0 * r_next / ((1.0 - r) * (1.0 - r_next));
    const double head = r * std::pow(std::abs(eta_part), 24);
    const double err = head * std::expm1(t);
    if (err <= target_eps || head == 0.0) {
      Complex e2 = eta_part * eta_part;      // ^2
      Complex e8 = e2 * e2 * e2 * e2;        // ^8
      Complex e24 = e8 * e8 * e8;            // ^24
      return {q * e24, err, 32.0 * n * std::numeric_limits<double>::epsilon() * head};
    }
  }
  throw Error(ErrorKind::TargetUnreachable, "cusp form product did not reach the target");
}

std::vector<BigInt> delta_q_expansion(int count) {
  if (count <= 0) return {};
  // prod_{n=1}^{count-1} (1 - q^n)^24 modulo q^count, then shift by q.
  std::vector<BigInt> series(count, 0);
  series[0] = 1;
  for (int n = 1; n < count; ++n) {
    for (int rep = 0; rep < 24; ++rep) {
      for (int k = count - 1; k >= n; --k) series[k] -= series[k - n];
    }
  }
  return series;
}

CertifiedValue local_coefficient(const std::array<Complex, 4>& omegas, double target_eps) {
  CertifiedValue prod{65536.0, 0.0};
  for (const Complex& w : omegas) prod = prod * delta_cusp(w, target_eps);
  return prod;
}

double jacobi_derivative_residual(Complex omega, const EvalOptions& opts) {
  ComplexMatrix m(1, 1);
  m(0, 0) = omega;
  const SiegelPoint tau = SiegelPoint::validate(1, m);
  const ThetaJet odd = theta_jet(tau, Characteristic::parse("1/1"), opts);
  const CertifiedValue t00 = theta(tau, Characteristic::parse("0/0"), opts);
  const CertifiedValue t01 = theta(tau, Characteristic::parse("0/1"), opts);
  const CertifiedValue t10 = theta(tau, Characteristic::parse("1/0"), opts);
  return std::abs(std::abs(odd.grad.value(0)) - std::numbers::pi * std::abs(t00.value * t01.value * t10.value));
}

}  // namespace thetanull
