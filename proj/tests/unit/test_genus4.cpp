#include <doctest.h>

#include "thetanull/errors.hpp"
#include "thetanull/genus4.hpp"

using namespace thetanull;

namespace {

LocalPoly x(int i) { return LocalPoly::var(i - 1); }

// Coefficients of q^1..q^n of q prod (1 - q^k)^24 via Euler's pentagonal
// series prod (1 - q^k) = sum (-1)^j q^(j(3j-1)/2), raised to the 24th power.
std::vector<BigInt> delta_by_pentagonal(int n) {
  std::vector<BigInt> eta(n, 0);
  for (int j = -n; j <= n; ++j) {
    const int e = j * (3 * j - 1) / 2;
    if (e >= 0 && e < n) eta[e] += (j % 2 == 0) ? 1 : -1;
  }
  std::vector<BigInt> power(n, 0);
  power[0] = 1;
  for (int rep = 0; rep < 24; ++rep) {
    std::vector<BigInt> next(n, 0);
    for (int a = 0; a < n; ++a) {
      for (int b = 0; a + b < n; ++b) next[a + b] += power[a] * eta[b];
    }
    power = std::move(next);
  }
  return power;
}

}  // namespace

TEST_SUITE("genus4_local") {
  TEST_CASE("polynomial arithmetic") {
    const LocalPoly p = (x(1) + x(2)) * (x(1) - x(2));
    CHECK(p == x(1).pow(2) - x(2).pow(2));
    CHECK((p - p).is_zero());
    CHECK(LocalPoly(0).is_zero());
    CHECK(p.total_degree() == 2);
    CHECK(p.is_homogeneous(2));
    CHECK_FALSE((p + LocalPoly(1)).is_homogeneous(2));
    CHECK(p.substitute(1, 3) == x(1).pow(2) - LocalPoly(9));
    CHECK(p.to_string() == "x1^2 - x2^2");
    CHECK((-x(3)).to_string() == "-x3");
    // Exact beyond 64 bits.
    const BigInt big = LocalPoly(3).pow(100).evaluate({0, 0, 0, 0, 0, 0});
    CHECK(big == boost::multiprecision::pow(BigInt(3), 100));
    CHECK_THROWS_AS(LocalPoly::var(6), std::out_of_range);
  }

  TEST_CASE("P and its restrictions") {
    const LocalPoly p = build_p();
    CHECK(p.evaluate({1, 1, 1, 1, 1, 1}) == -3);
    CHECK(p.total_degree() == 8);
    CHECK(p.is_homogeneous(8));
    CHECK(substitution_identity_check());

    const LocalPoly x3456 = (x(3) * x(4) * x(5) * x(6)).pow(2);
    CHECK(p.substitute(0, 0) == x3456);
    CHECK(p.substitute(1, 0) == x3456);
    CHECK(p.substitute(2, 0) == (x(1) * x(2) * x(5) * x(6)).pow(2));
    CHECK(p_restricted_to_x1_zero() == x3456);

    // Expanded by hand: x1^2x2^2x5^2x6^2 - 2 x1x2x3x4x5^2x6^2 + x3^2x4^2x5^2x6^2
    //   - 2 x1^2x2^2x3x4x5x6 - 2 x1x2x3^2x4^2x5x6 + x1^2x2^2x3^2x4^2.
    CHECK(p.terms().size() == 6);
    const LocalPoly expanded = (x(1) * x(2) * x(5) * x(6)).pow(2) -
                               LocalPoly(2) * x(1) * x(2) * x(3) * x(4) * (x(5) * x(6)).pow(2) + x3456 -
                               LocalPoly(2) * (x(1) * x(2)).pow(2) * x(3) * x(4) * x(5) * x(6) -
                               LocalPoly(2) * x(1) * x(2) * (x(3) * x(4)).pow(2) * x(5) * x(6) +
                               (x(1) * x(2) * x(3) * x(4)).pow(2);
    CHECK(p == expanded);
  }

  TEST_CASE("P symmetries") {
    const LocalPoly p = build_p();
    CHECK(p.permute({1, 0, 3, 2, 5, 4}) == p);
    CHECK(p.permute({2, 3, 0, 1, 4, 5}) == p);
  }

  TEST_CASE("cusp form q-expansion") {
    const auto series = delta_q_expansion(12);
    CHECK(series == delta_by_pentagonal(12));
    CHECK(std::vector<BigInt>(series.begin(), series.begin() + 4) == std::vector<BigInt>{1, -24, 252, -1472});
    CHECK(series[10] == 534612);  // tau(11)
    CHECK(delta_q_expansion(0).empty());
  }

  TEST_CASE("cusp form values") {
    const Complex w(0.0, 1.3);
    const CertifiedValue d = delta_cusp(w);
    const CertifiedValue s = delta_cusp(-1.0 / w);
    CHECK(std::abs(s.value - std::pow(w, 12) * d.value) < 1e-9 * std::abs(s.value));
    CHECK(std::abs(delta_cusp(w + 1.0).value - d.value) < 1e-12 * std::abs(d.value));

    // Against the truncated q-series.
    const Complex w2(0.2, 0.9);
    const auto coeffs = delta_q_expansion(40);
    const Complex q = std::exp(Complex(0.0, 2.0 * std::numbers::pi) * w2);
    Complex series = 0.0, qn = 1.0;
    for (const auto& c : coeffs) {
      qn *= q;
      series += static_cast<double>(c) * qn;
    }
    CHECK(std::abs(delta_cusp(w2).value - series) < 1e-14);

    const CertifiedValue at_i = delta_cusp(Complex(0.0, 1.0));
    CHECK(at_i.value.real() > 0.0);
    CHECK(std::abs(at_i.value.imag()) < 1e-18);

    try {
      delta_cusp(Complex(0.0, 0.01));
      FAIL("expected TargetUnreachable");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::TargetUnreachable);
    }
  }

  TEST_CASE("local coefficient") {
    const Complex i(0.0, 1.0);
    const CertifiedValue all_i = local_coefficient({i, i, i, i});
    CHECK(all_i.value.real() > 0.0);
    CHECK(std::abs(all_i.value - 65536.0 * std::pow(delta_cusp(i).value, 4)) < 1e-12 * all_i.abs());

    const std::array<Complex, 4> w = {Complex(0.1, 1.0), Complex(-0.2, 0.8), Complex(0.3, 1.5), Complex(0.0, 2.0)};
    const std::array<Complex, 4> permuted = {w[2], w[0], w[3], w[1]};
    CHECK(std::abs(local_coefficient(w).value - local_coefficient(permuted).value) < 1e-14 * local_coefficient(w).abs());

    const std::array<Complex, 4> cusp = {i, i, i, Complex(0.0, 12.0)};
    CHECK(local_coefficient(cusp).abs() < 1e-20 * all_i.abs());
  }

  TEST_CASE("Jacobi derivative residual") {
    CHECK(jacobi_derivative_residual(Complex(0.0, 1.0)) < 1e-11);
    CHECK(jacobi_derivative_residual(Complex(1.0, 1.0)) < 1e-11);
    EvalOptions tight;
    tight.target_eps = 1e-15;
    CHECK(jacobi_derivative_residual(Complex(0.3, 0.6), tight) < 1e-12);
  }
}
