#include "thetanull/symplectic.hpp"

#include <Eigen/LU>
#include <Eigen/SVD>

#include "thetanull/errors.hpp"

namespace thetanull {

namespace {

bool is_symmetric(const IntMatrix& m) { return m == m.transpose(); }

std::int64_t mod_positive(std::int64_t v, std::int64_t n) {
  const std::int64_t r = v % n;
  return r < 0 ? r + n : r;
}

}  // namespace

SymplecticMatrix::SymplecticMatrix(IntMatrix a, IntMatrix b, IntMatrix c, IntMatrix d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
  const auto g = a_.rows();
  const bool square = g > 0 && a_.cols() == g && b_.rows() == g && b_.cols() == g &&
                      c_.rows() == g && c_.cols() == g && d_.rows() == g && d_.cols() == g;
  if (!square) throw Error(ErrorKind::NotSymplectic, "blocks must be g x g");
  const IntMatrix id = IntMatrix::Identity(g, g);
  if (a_ * d_.transpose() - b_ * c_.transpose() != id || !is_symmetric(a_ * b_.transpose()) ||
      !is_symmetric(c_ * d_.transpose())) {
    throw Error(ErrorKind::NotSymplectic, "symplectic relations fail");
  }
}

SymplecticMatrix SymplecticMatrix::identity(int genus) {
  const IntMatrix id = IntMatrix::Identity(genus, genus);
  const IntMatrix zero = IntMatrix::Zero(genus, genus);
  return {id, zero, zero, id};
}

SymplecticMatrix SymplecticMatrix::inversion(int genus) {
  const IntMatrix id = IntMatrix::Identity(genus, genus);
  const IntMatrix zero = IntMatrix::Zero(genus, genus);
  return {zero, -id, id, zero};
}

SymplecticMatrix SymplecticMatrix::translation(const IntMatrix& s) {
  const auto g = s.rows();
  const IntMatrix id = IntMatrix::Identity(g, g);
  return {id, s, IntMatrix::Zero(g, g), id};
}

SymplecticMatrix SymplecticMatrix::lower_translation(const IntMatrix& s) {
  const auto g = s.rows();
  const IntMatrix id = IntMatrix::Identity(g, g);
  return {id, IntMatrix::Zero(g, g), s, id};
}

SymplecticMatrix SymplecticMatrix::change_of_basis(const IntMatrix& u, const IntMatrix& u_inv) {
  const auto g = u.rows();
  if (u * u_inv != IntMatrix::Identity(g, g)) {
    throw Error(ErrorKind::NotSymplectic, "u_inv is not the inverse of u");
  }
  return {u, IntMatrix::Zero(g, g), IntMatrix::Zero(g, g), u_inv.transpose()};
}

SymplecticMatrix SymplecticMatrix::operator*(const SymplecticMatrix& r) const {
  if (genus() != r.genus()) throw Error(ErrorKind::GenusMismatch, "product of different genera");
  return {a_ * r.a_ + b_ * r.c_, a_ * r.b_ + b_ * r.d_, c_ * r.a_ + d_ * r.c_, c_ * r.b_ + d_ * r.d_};
}

SymplecticMatrix SymplecticMatrix::inverse() const {
  return {d_.transpose(), -b_.transpose(), -c_.transpose(), a_.transpose()};
}

bool SymplecticMatrix::operator==(const SymplecticMatrix& o) const {
  return genus() == o.genus() && a_ == o.a_ && b_ == o.b_ && c_ == o.c_ && d_ == o.d_;
}

ComplexMatrix cocycle(const SymplecticMatrix& m, const SiegelPoint& tau) {
  if (m.genus() != tau.genus()) throw Error(ErrorKind::GenusMismatch, "M and tau genus differ");
  return m.c().cast<double>().cast<Complex>() * tau.matrix() + m.d().cast<double>().cast<Complex>();
}

SiegelPoint symplectic_action(const SymplecticMatrix& m, const SiegelPoint& tau) {
  const ComplexMatrix denom = cocycle(m, tau);
  const ComplexMatrix numer = m.a().cast<double>().cast<Complex>() * tau.matrix() +
                              m.b().cast<double>().cast<Complex>();

  Eigen::JacobiSVD<ComplexMatrix> svd(denom);
  const auto& sv = svd.singularValues();
  const double smallest = sv(sv.size() - 1);
  if (!(smallest > 0.0) || sv(0) / smallest > kMaxCocycleCondition) {
    throw Error(ErrorKind::SingularCocycle, "c tau + d is numerically singular");
  }
  // X (c tau + d) = a tau + b  <=>  (c tau + d)^t X^t = (a tau + b)^t.
  const ComplexMatrix xt = denom.transpose().partialPivLu().solve(numer.transpose());
  return make_siegel_unchecked_symmetry(xt.transpose());
}

Characteristic char_action(const SymplecticMatrix& m, const Characteristic& ch) {
  const int g = m.genus();
  if (ch.genus() != g) throw Error(ErrorKind::GenusMismatch, "M and characteristic genus differ");
  Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1> eps(g), delta(g);
  for (int i = 0; i < g; ++i) {
    eps(i) = ch.eps(i);
    delta(i) = ch.delta(i);
  }
  const IntMatrix cdt = m.c() * m.d().transpose();
  const IntMatrix abt = m.a() * m.b().transpose();
  const auto new_eps = (m.d() * eps - m.c() * delta).eval();
  const auto new_delta = (-m.b() * eps + m.a() * delta).eval();
  std::uint16_t e = 0, d = 0;
  for (int i = 0; i < g; ++i) {
    if (mod_positive(new_eps(i) + cdt(i, i), 2)) e |= static_cast<std::uint16_t>(1u << i);
    if (mod_positive(new_delta(i) + abt(i, i), 2)) d |= static_cast<std::uint16_t>(1u << i);
  }
  return {g, e, d};
}

bool in_level_subgroup(const SymplecticMatrix& m, int n, bool tight) {
  const int g = m.genus();
  const IntMatrix id = IntMatrix::Identity(g, g);
  auto divisible = [n](const IntMatrix& x) {
    for (Eigen::Index i = 0; i < x.size(); ++i) {
      if (x.data()[i] % n != 0) return false;
    }
    return true;
  };
  if (!divisible(m.a() - id) || !divisible(m.b()) || !divisible(m.c()) || !divisible(m.d() - id)) {
    return false;
  }
  if (!tight) return true;
  const IntMatrix abt = m.a() * m.b().transpose();
  const IntMatrix cdt = m.c() * m.d().transpose();
  for (int i = 0; i < g; ++i) {
    if (abt(i, i) % (2 * n) != 0 || cdt(i, i) % (2 * n) != 0) return false;
  }
  return true;
}

}  // namespace thetanull
