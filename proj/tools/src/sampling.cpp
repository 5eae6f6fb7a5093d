#include "thetanull/cli/sampling.hpp"

namespace thetanull::cli {

double Sampler::uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

int Sampler::integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

RealMatrix Sampler::symmetric(int g) {
  RealMatrix a(g, g);
  for (int i = 0; i < g; ++i) {
    for (int j = i; j < g; ++j) a(i, j) = a(j, i) = uniform(-1.0, 1.0);
  }
  return a;
}

RealMatrix Sampler::square(int g) {
  RealMatrix b(g, g);
  for (int i = 0; i < g; ++i) {
    for (int j = 0; j < g; ++j) b(i, j) = uniform(-1.0, 1.0);
  }
  return b;
}

SiegelPoint Sampler::tau(int g) {
  const RealMatrix a = symmetric(g);
  const RealMatrix b = square(g);
  const RealMatrix y = b * b.transpose() + g * RealMatrix::Identity(g, g);
  return SiegelPoint::validate(g, a.cast<Complex>() + Complex(0.0, 1.0) * y.cast<Complex>());
}

SiegelPoint Sampler::shallow_tau(int g) {
  const RealMatrix a = symmetric(g);
  const RealMatrix b = square(g);
  const RealMatrix y = b * b.transpose() / g + 0.5 * RealMatrix::Identity(g, g);
  return SiegelPoint::validate(g, a.cast<Complex>() + Complex(0.0, 1.0) * y.cast<Complex>());
}

ComplexVector Sampler::z(int g, double im_bound) {
  ComplexVector v(g);
  for (int i = 0; i < g; ++i) v(i) = Complex(uniform(-1.0, 1.0), uniform(-im_bound, im_bound));
  return v;
}

Complex Sampler::upper(double lo, double hi) { return {uniform(-0.5, 0.5), uniform(lo, hi)}; }

IntMatrix small_even_symmetric(Sampler& s, int g) {
  IntMatrix m = IntMatrix::Zero(g, g);
  const int i = s.integer(0, g - 1);
  const int j = s.integer(0, g - 1);
  const int sign = s.integer(0, 1) ? 1 : -1;
  if (i == j) {
    m(i, i) = 2 * sign;
  } else {
    m(i, j) = m(j, i) = sign;
  }
  return m;
}

SymplecticMatrix level_48_generator(Sampler& s, int g) {
  const bool upper = s.integer(0, 1) == 0;
  const IntMatrix e = 4 * small_even_symmetric(s, g);
  return upper ? SymplecticMatrix::translation(e) : SymplecticMatrix::lower_translation(e);
}

}  // namespace thetanull::cli
