#pragma once

#include <cstdint>
#include <random>

#include "thetanull/siegel_point.hpp"
#include "thetanull/symplectic.hpp"

namespace thetanull::cli {

/// Seeded source of random period matrices and group elements. Every draw is a
/// pure function of the seed and the sequence of calls.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi);
  int integer(int lo, int hi);

  /// Symmetric g x g real matrix with entries uniform in [-1, 1].
  RealMatrix symmetric(int g);
  /// g x g real matrix with entries uniform in [-1, 1].
  RealMatrix square(int g);

  /// A + i (B B^T + g I).
  SiegelPoint tau(int g);
  /// A + i (B B^T / g + I / 2): imaginary part with eigenvalues in [1/2, g + 1/2].
  SiegelPoint shallow_tau(int g);

  /// Complex vector with real parts uniform in [-1, 1] and imaginary parts
  /// uniform in [-im_bound, im_bound].
  ComplexVector z(int g, double im_bound = 1.0);
  /// Point of the upper half-plane with real part in [-1/2, 1/2] and
  /// imaginary part in [lo, hi].
  Complex upper(double lo, double hi);

 private:
  std::mt19937_64 rng_;
};

/// Symmetric integer matrix with even diagonal and one or two nonzero entries,
/// the shape used for level (4, 8) generators.
IntMatrix small_even_symmetric(Sampler& s, int g);

/// One of (I, 4B; 0, I) or (I, 0; 4C, I) with B, C from small_even_symmetric.
SymplecticMatrix level_48_generator(Sampler& s, int g);

}  // namespace thetanull::cli
