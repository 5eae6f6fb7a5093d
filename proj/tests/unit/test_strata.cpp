#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "thetanull/errors.hpp"
#include "thetanull/strata.hpp"

using namespace thetanull;
using oracle::kI;

namespace {

SiegelPoint point(const ComplexMatrix& m) { return SiegelPoint::validate(static_cast<int>(m.rows()), m); }

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no thetanull::Error thrown");
  return ErrorKind::NoConvergence;
}

SiegelPoint random_tau(std::mt19937_64& rng, int g) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  RealMatrix a(g, g), b(g, g);
  for (int i = 0; i < g; ++i) {
    for (int j = 0; j < g; ++j) b(i, j) = u(rng);
    for (int j = i; j < g; ++j) a(i, j) = a(j, i) = u(rng);
  }
  const RealMatrix y = b * b.transpose() + g * RealMatrix::Identity(g, g);
  return point(a.cast<Complex>() + kI * y.cast<Complex>());
}

// Even characteristics of diag(tau_1, ..., tau_g) vanish iff some diagonal
// factor has the odd genus-1 characteristic [1, 1].
int vanishing_on_diagonal(int g) {
  int count = 0;
  for (const auto& ch : enumerate_even_chars(g)) {
    bool any_odd = false;
    for (int i = 0; i < g; ++i) any_odd = any_odd || (ch.eps(i) && ch.delta(i));
    count += any_odd ? 1 : 0;
  }
  return count;
}

}  // namespace

TEST_SUITE("strata") {
  TEST_CASE("vanishing even constants on diagonal points") {
    CHECK(vanishing_even_chars(point(oracle::diag_i(1)), 1e-10).empty());

    const auto g2 = vanishing_even_chars(point(oracle::diag_i(2)), 1e-10);
    REQUIRE(g2.size() == 1);
    CHECK(g2[0].ch.to_string() == "11/11");

    CHECK(vanishing_on_diagonal(4) == 55);
    CHECK(vanishing_even_chars(point(oracle::diag_i(4)), 1e-10).size() == 55);
  }

  TEST_CASE("tolerance must exceed the certificate") {
    CHECK(kind_of([] { vanishing_even_chars(point(oracle::diag_i(2)), 1e-16); }) ==
          ErrorKind::ToleranceBelowCertificate);
  }

  TEST_CASE("Hessian ranks") {
    CHECK(hessian_rank(point(oracle::diag_i(1)), Characteristic::parse("0/0"), 1e-8).rank == 1);
    const HessianRank r = hessian_rank(point(oracle::diag_i(2)), Characteristic::parse("11/11"), 1e-8);
    CHECK(r.rank == 2);
    CHECK(r.singular_values(1) / r.singular_values(0) == doctest::Approx(1.0));
    CHECK(kind_of([] { hessian_rank(point(oracle::diag_i(2)), Characteristic::parse("10/10"), 1e-8); }) ==
          ErrorKind::BadCharacteristic);

    ComplexMatrix zero = ComplexMatrix::Zero(3, 3);
    CHECK(numerical_rank(zero, 1e-8).rank == 0);
    std::mt19937_64 rng(1);
    const SiegelPoint tau = random_tau(rng, 3);
    const ComplexMatrix h = theta_jet(tau, Characteristic::zero(3)).hess.value;
    int previous = 4;
    for (double tol : {1e-14, 1e-8, 1e-4, 1e-2, 0.5, 2.0}) {
      const int rank = numerical_rank(h, tol).rank;
      CHECK(rank <= previous);
      previous = rank;
    }
  }

  TEST_CASE("verdict mapping") {
    CHECK(genus4_verdict(std::nullopt) == Verdict::NotThetaNull);
    CHECK(genus4_verdict(4) == Verdict::ThetaNullRank4);
    CHECK(genus4_verdict(3) == Verdict::JacobianThetaNull);
    for (int r : {0, 1, 2}) CHECK(genus4_verdict(r) == Verdict::ReducibleCandidate);
    CHECK(to_string(Verdict::ReducibleCandidate) == "REDUCIBLE_CANDIDATE");
  }

  TEST_CASE("stratum of reducible and generic points") {
    const StrataReport diag = stratum(point(oracle::diag_i(4)));
    CHECK(diag.stratum == 0);
    CHECK(diag.verdict_g4 == Verdict::ReducibleCandidate);
    CHECK(diag.per_char_rank.size() == diag.vanishing.size());

    std::mt19937_64 rng(2);
    const StrataReport generic = stratum(random_tau(rng, 2));
    CHECK(generic.vanishing.empty());
    CHECK_FALSE(generic.stratum.has_value());
    CHECK_FALSE(generic.verdict_g4.has_value());

    CHECK(stratum(random_tau(rng, 4)).verdict_g4 == Verdict::NotThetaNull);

    const StrataReport split = stratum(block_diag(random_tau(rng, 1), random_tau(rng, 3)));
    CHECK(split.stratum == 2);
    CHECK(split.verdict_g4 == Verdict::ReducibleCandidate);
  }

  TEST_CASE("Newton onto the divisor") {
    ComplexMatrix m = oracle::diag_i(2);
    m(0, 1) = m(1, 0) = 0.05;
    const Characteristic ch = Characteristic::parse("11/11");
    const NewtonResult r = find_theta_null(point(m), ch, 0, 1, 1e-12);
    CHECK(r.residual < 1e-12);
    CHECK(std::abs(r.tau(0, 1)) < 1e-10);

    const NewtonResult again = find_theta_null(r.tau, ch, 0, 1, 1e-12);
    CHECK(again.iterations == 0);
    CHECK(again.tau.matrix() == r.tau.matrix());

    // theta_00 barely depends on tau_01 this deep in the cusp.
    ComplexMatrix deep = oracle::diag_i(2, 8.0);
    CHECK(kind_of([&] { find_theta_null(point(deep), Characteristic::zero(2), 0, 1, 1e-12); }) ==
          ErrorKind::NoConvergence);
  }

  TEST_CASE("Theorem th checks") {
    ComplexMatrix m = oracle::diag_i(2);
    m(0, 1) = m(1, 0) = 0.05;
    const SiegelPoint on = find_theta_null(point(m), Characteristic::parse("11/11"), 0, 1, 1e-13).tau;
    for (int h = 0; h <= 2; ++h) CHECK(theorem_th_check(on, Characteristic::parse("11/11"), h).holds());
    CHECK_FALSE(theorem_th_check(on, Characteristic::parse("11/11"), 1).rank_at_most_h);
    CHECK(theorem_th_check(on, Characteristic::parse("11/11"), 2).rank_at_most_h);

    // Rank 2 at genus 3: h = 2 holds with vanishing minors.
    const SiegelPoint drop = point(oracle::diag_i(3));
    const Characteristic ch = Characteristic::parse("110/110");
    const TheoremThResult r = theorem_th_check(drop, ch, 2);
    CHECK(r.rank_at_most_h);
    CHECK(r.minors_vanish);

    CHECK(kind_of([&] { theorem_th_check(point(oracle::diag_i(2)), 1); }) == ErrorKind::NotOnTheta0);
    CHECK(kind_of([&] { theorem_th_check(on, Characteristic::parse("11/11"), 3); }) == ErrorKind::BadOrder);
  }
}
