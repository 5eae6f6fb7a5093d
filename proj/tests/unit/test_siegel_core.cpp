#include <doctest.h>

#include <random>
#include <set>

#include <Eigen/LU>

#include "thetanull/characteristic.hpp"
#include "thetanull/errors.hpp"
#include "thetanull/siegel_point.hpp"
#include "thetanull/symplectic.hpp"

using namespace thetanull;

namespace {

constexpr Complex kI{0.0, 1.0};

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
  return SiegelPoint::validate(g, a.cast<Complex>() + kI * y.cast<Complex>());
}

SymplecticMatrix random_generator(std::mt19937_64& rng, int g) {
  std::uniform_int_distribution<int> pick(0, 3), entry(-1, 1), coord(0, g - 1);
  IntMatrix s = IntMatrix::Zero(g, g);
  for (int i = 0; i < g; ++i) {
    for (int j = i; j < g; ++j) s(i, j) = s(j, i) = entry(rng);
  }
  switch (pick(rng)) {
    case 0: return SymplecticMatrix::inversion(g);
    case 1: return SymplecticMatrix::translation(s);
    case 2: return SymplecticMatrix::lower_translation(s);
    default: {
      IntMatrix u = IntMatrix::Identity(g, g), v = IntMatrix::Identity(g, g);
      const int i = coord(rng), j = coord(rng);
      if (i != j) {
        u(i, j) = 1;
        v(i, j) = -1;
      }
      return SymplecticMatrix::change_of_basis(u, v);
    }
  }
}

}  // namespace

TEST_SUITE("siegel_core") {
  TEST_CASE("validate accepts and rejects") {
    ComplexMatrix one(1, 1);
    one(0, 0) = kI;
    CHECK(SiegelPoint::validate(1, one).genus() == 1);

    ComplexMatrix bad(2, 2);
    bad << kI, 5.0 * kI, 5.0 * kI, kI;
    CHECK(kind_of([&] { SiegelPoint::validate(2, bad); }) == ErrorKind::NotPositiveDefinite);

    ComplexMatrix good(2, 2);
    good << kI, 0.1, 0.1, 2.0 * kI;
    const SiegelPoint t = SiegelPoint::validate(2, good);
    CHECK(min_imag_eigenvalue(t) == doctest::Approx(1.0));

    ComplexMatrix asym = good;
    asym(0, 1) = 0.2;
    CHECK(kind_of([&] { SiegelPoint::validate(2, asym); }) == ErrorKind::NotSymmetric);
    CHECK(kind_of([&] { SiegelPoint::validate(3, good); }) == ErrorKind::GenusMismatch);
  }

  TEST_CASE("stored matrix is exactly symmetric") {
    ComplexMatrix m(2, 2);
    m << kI, Complex(0.1, 0.2), Complex(0.1, 0.2) + Complex(1e-15, 0.0), 2.0 * kI;
    const SiegelPoint t = SiegelPoint::validate(2, m);
    CHECK(t(0, 1) == t(1, 0));
  }

  TEST_CASE("even characteristic counts and order") {
    for (int g = 1; g <= 4; ++g) {
      const auto even = enumerate_even_chars(g);
      CHECK(static_cast<long>(even.size()) == even_char_count(g));
      CHECK(std::set<Characteristic>(even.begin(), even.end()).size() == even.size());
      CHECK(std::is_sorted(even.begin(), even.end()));
      for (const auto& ch : even) {
        int dot = 0;
        for (int i = 0; i < g; ++i) dot += ch.eps(i) * ch.delta(i);
        CHECK(dot % 2 == 0);
      }
      CHECK(even.size() + enumerate_odd_chars(g).size() == (1u << (2 * g)));
    }
    CHECK(even_char_count(2) == 10);
    CHECK(even_char_count(4) == 136);
    const auto g1 = enumerate_even_chars(1);
    REQUIRE(g1.size() == 3);
    CHECK(g1[0].to_string() == "0/0");
    CHECK(g1[1].to_string() == "0/1");
    CHECK(g1[2].to_string() == "1/0");
  }

  TEST_CASE("characteristic parsing and slicing") {
    const Characteristic c = Characteristic::parse("1100/1100");
    CHECK(c.genus() == 4);
    CHECK(c.eps(0) == 1);
    CHECK(c.eps(2) == 0);
    CHECK(c.is_even());
    CHECK(c.to_string() == "1100/1100");
    CHECK(c.slice(0, 2).concat(c.slice(2, 2)) == c);
    CHECK(Characteristic::parse("1/1").parity() == Parity::Odd);
    CHECK(kind_of([] { Characteristic::parse("12/00"); }) == ErrorKind::BadCharacteristic);
    CHECK(kind_of([] { Characteristic::parse("10/0"); }) == ErrorKind::BadCharacteristic);
  }

  TEST_CASE("symplectic relations are checked exactly") {
    const IntMatrix id = IntMatrix::Identity(2, 2);
    IntMatrix b(2, 2);
    b << 0, 1, 0, 0;  // not symmetric
    CHECK(kind_of([&] { SymplecticMatrix(id, b, IntMatrix::Zero(2, 2), id); }) == ErrorKind::NotSymplectic);
  }

  TEST_CASE("symplectic action examples") {
    std::mt19937_64 rng(11);
    const SiegelPoint tau = random_tau(rng, 3);
    CHECK((symplectic_action(SymplecticMatrix::identity(3), tau).matrix() - tau.matrix()).norm() < 1e-14);
    const ComplexMatrix inv = -tau.matrix().inverse();
    CHECK((symplectic_action(SymplecticMatrix::inversion(3), tau).matrix() - inv).norm() < 1e-12);

    ComplexMatrix one(1, 1);
    one(0, 0) = kI;
    IntMatrix two(1, 1);
    two(0, 0) = 2;
    const SiegelPoint shifted = symplectic_action(SymplecticMatrix::translation(two), SiegelPoint::validate(1, one));
    CHECK(shifted(0, 0) == Complex(2.0, 1.0));
  }

  TEST_CASE("symplectic action is a group action") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 40; ++trial) {
      const int g = 1 + trial % 4;
      const SiegelPoint tau = random_tau(rng, g);
      const SymplecticMatrix m = random_generator(rng, g);
      const SymplecticMatrix n = random_generator(rng, g);
      const ComplexMatrix lhs = symplectic_action(m * n, tau).matrix();
      const ComplexMatrix rhs = symplectic_action(m, symplectic_action(n, tau)).matrix();
      CHECK((lhs - rhs).norm() <= 1e-10 * lhs.norm());
      CHECK_NOTHROW(SiegelPoint::validate(g, symplectic_action(m, tau).matrix()));
    }
  }

  TEST_CASE("char_action examples") {
    const Characteristic ch = Characteristic::parse("0/1");
    CHECK(char_action(SymplecticMatrix::identity(1), ch) == ch);
    CHECK(char_action(SymplecticMatrix::inversion(1), ch) == Characteristic::parse("1/0"));
  }

  TEST_CASE("char_action composes and preserves parity") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 120; ++trial) {
      const int g = 1 + trial % 4;
      const SymplecticMatrix m = random_generator(rng, g);
      const SymplecticMatrix n = random_generator(rng, g);
      for (const auto& ch : enumerate_even_chars(g)) {
        CHECK(char_action(n, char_action(m, ch)) == char_action(n * m, ch));
        CHECK(char_action(m, ch).is_even());
      }
      for (const auto& ch : enumerate_odd_chars(g)) CHECK(!char_action(m, ch).is_even());
    }
  }

  TEST_CASE("level subgroups") {
    CHECK(in_level_subgroup(SymplecticMatrix::identity(2), 4, true));
    IntMatrix b(2, 2);
    b << 2, 1, 1, 0;
    CHECK(in_level_subgroup(SymplecticMatrix::translation(4 * b), 4, true));
    b << 1, 1, 1, 0;
    const SymplecticMatrix odd = SymplecticMatrix::translation(4 * b);
    CHECK(in_level_subgroup(odd, 4, false));
    CHECK_FALSE(in_level_subgroup(odd, 4, true));
    CHECK_FALSE(in_level_subgroup(SymplecticMatrix::inversion(2), 2, false));
  }

  TEST_CASE("block_diag and half periods") {
    ComplexMatrix a(1, 1), b(1, 1);
    a(0, 0) = kI;
    b(0, 0) = 2.0 * kI;
    const SiegelPoint t = block_diag(SiegelPoint::validate(1, a), SiegelPoint::validate(1, b));
    CHECK(t(0, 0) == kI);
    CHECK(t(1, 1) == 2.0 * kI);
    CHECK(t(0, 1) == Complex(0.0));

    const SiegelPoint i1 = SiegelPoint::validate(1, a);
    CHECK(point_of_order_two(i1, Characteristic::parse("0/0")).coords(0) == Complex(0.0));
    CHECK(point_of_order_two(i1, Characteristic::parse("1/0")).coords(0) == Complex(0.0, 0.5));
    CHECK(point_of_order_two(i1, Characteristic::parse("1/1")).coords(0) == Complex(0.5, 0.5));
  }

  TEST_CASE("with_entry keeps symmetry and rejects leaving the space") {
    ComplexMatrix m(2, 2);
    m << kI, 0.0, 0.0, kI;
    const SiegelPoint t = SiegelPoint::validate(2, m);
    const SiegelPoint moved = t.with_entry(0, 1, Complex(0.3, 0.2));
    CHECK(moved(1, 0) == Complex(0.3, 0.2));
    CHECK(kind_of([&] { t.with_entry(0, 1, Complex(0.0, 2.0)); }) == ErrorKind::LeftSiegelSpace);
  }
}
