#include "thetanull/covariant.hpp"

#include <limits>
#include <numbers>

#include "thetanull/errors.hpp"

namespace thetanull {

Complex d_operator_factor() { return Complex(0.0, 4.0 * std::numbers::pi); }

CertifiedMatrix d_apply(const ThetaJet& jet) {
  const Complex f = d_operator_factor();
  return {jet.hess.value / f, jet.hess.err / std::abs(f)};
}

CertifiedMatrix d_apply(const SiegelPoint& tau, const Characteristic& ch, const EvalOptions& opts) {
  return d_apply(theta_jet(tau, ch, opts));
}

namespace {

void check_pair(const Characteristic& base, const Characteristic& aux) {
  if (base.genus() != aux.genus()) throw Error(ErrorKind::GenusMismatch, "characteristics of different genus");
  if (!base.is_even() || !aux.is_even()) {
    throw Error(ErrorKind::BadCharacteristic, "covariant matrix needs even characteristics");
  }
  if (base == aux) throw Error(ErrorKind::BadCharacteristic, "base and auxiliary characteristic coincide");
}

}  // namespace

CovariantMatrix covariant_matrix(const ThetaJet& base_jet, const Characteristic& base, const ThetaJet& aux_jet,
                                 const Characteristic& aux) {
  check_pair(base, aux);
  const CertifiedMatrix d_base = d_apply(base_jet);
  const CertifiedMatrix d_aux = d_apply(aux_jet);
  const auto g = d_base.rows();
  CertifiedMatrix out{ComplexMatrix(g, g), RealMatrix(g, g)};
  for (Eigen::Index i = 0; i < g; ++i) {
    for (Eigen::Index j = 0; j < g; ++j) {
      const CertifiedValue e = aux_jet.value * d_base.at(i, j) - base_jet.value * d_aux.at(i, j);
      out.value(i, j) = e.value;
      out.err(i, j) = e.err;
    }
  }
  return {std::move(out), base, aux};
}

CovariantMatrix covariant_matrix(const SiegelPoint& tau, const Characteristic& base, const Characteristic& aux,
                                 const EvalOptions& opts) {
  check_pair(base, aux);
  return covariant_matrix(theta_jet(tau, base, opts), base, theta_jet(tau, aux, opts), aux);
}

CovariantMatrix covariant_matrix(const SiegelPoint& tau, const Characteristic& aux, const EvalOptions& opts) {
  return covariant_matrix(tau, Characteristic::zero(aux.genus()), aux, opts);
}

std::vector<std::vector<int>> lexicographic_subsets(int n, int h) {
  std::vector<std::vector<int>> out;
  if (h < 0 || h > n) return out;
  std::vector<int> cur(h);
  for (int i = 0; i < h; ++i) cur[i] = i;
  while (true) {
    out.push_back(cur);
    int k = h - 1;
    while (k >= 0 && cur[k] == n - h + k) --k;
    if (k < 0) break;
    ++cur[k];
    for (int i = k + 1; i < h; ++i) cur[i] = cur[i - 1] + 1;
  }
  return out;
}

Complex bareiss_determinant(ComplexMatrix m) {
  const auto n = m.rows();
  if (n == 0) return 1.0;
  Complex prev = 1.0;
  double sign = 1.0;
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    Eigen::Index pivot = k;
    for (Eigen::Index i = k + 1; i < n; ++i) {
      if (std::abs(m(i, k)) > std::abs(m(pivot, k))) pivot = i;
    }
    if (m(pivot, k) == 0.0) return 0.0;
    if (pivot != k) {
      m.row(k).swap(m.row(pivot));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) {
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
      }
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

CertifiedValue determinant(const CertifiedMatrix& m) {
  const auto n = m.rows();
  const Complex det = bareiss_determinant(m.value);
  // prod (A_j + E_j) - prod A_j accumulated without cancellation.
  double prod_a = 1.0;
  double diff = 0.0;
  for (Eigen::Index j = 0; j < n; ++j) {
    const double a = m.value.col(j).norm();
    const double e = m.err.col(j).norm();
    diff = diff * (a + e) + prod_a * e;
    prod_a *= a;
  }
  const double roundoff = 4.0 * static_cast<double>(n) * std::numeric_limits<double>::epsilon() * prod_a;
  return {det, diff, roundoff};
}

MinorMatrix b_minors(const CertifiedMatrix& m, int h) {
  const int g = static_cast<int>(m.rows());
  if (h < 1 || h > g) {
    throw Error(ErrorKind::BadOrder, "minor order " + std::to_string(h) + " outside 1.." + std::to_string(g));
  }
  MinorMatrix out;
  out.h = h;
  out.subsets = lexicographic_subsets(g, h);
  const auto count = static_cast<Eigen::Index>(out.subsets.size());
  out.entries = {ComplexMatrix(count, count), RealMatrix(count, count)};
  CertifiedMatrix sub{ComplexMatrix(h, h), RealMatrix(h, h)};
  // The input is symmetric, so minor (J, I) is the transpose of minor (I, J).
  for (Eigen::Index r = 0; r < count; ++r) {
    for (Eigen::Index c = r; c < count; ++c) {
      const auto& rows = out.subsets[r];
      const auto& cols = out.subsets[c];
      for (int i = 0; i < h; ++i) {
        for (int j = 0; j < h; ++j) {
          sub.value(i, j) = m.value(rows[i], cols[j]);
          sub.err(i, j) = m.err(rows[i], cols[j]);
        }
      }
      const CertifiedValue d = determinant(sub);
      out.entries.value(r, c) = out.entries.value(c, r) = d.value;
      out.entries.err(r, c) = out.entries.err(c, r) = d.err;
    }
  }
  return out;
}

CertifiedValue f_form(const SiegelPoint& tau, const Characteristic& base, const Characteristic& aux,
                      const EvalOptions& opts) {
  return determinant(covariant_matrix(tau, base, aux, opts).entries);
}

CertifiedValue f_form(const SiegelPoint& tau, const Characteristic& aux, const EvalOptions& opts) {
  return f_form(tau, Characteristic::zero(aux.genus()), aux, opts);
}

}  // namespace thetanull
