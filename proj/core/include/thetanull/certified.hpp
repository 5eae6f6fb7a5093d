#pragma once

#include <cmath>
#include <complex>

#include <Eigen/Core>

namespace thetanull {

/// A complex value together with a rigorous bound on the truncation error
/// |true - value|. `roundoff` is a heuristic floating-point error estimate
/// and is never part of `err`.
struct CertifiedValue {
  std::complex<double> value{};
  double err = 0.0;
  double roundoff = 0.0;

  double abs() const { return std::abs(value); }
};

inline CertifiedValue operator*(const CertifiedValue& x, const CertifiedValue& y) {
  return {x.value * y.value, std::abs(x.value) * y.err + std::abs(y.value) * x.err + x.err * y.err,
          std::abs(x.value) * y.roundoff + std::abs(y.value) * x.roundoff};
}

inline CertifiedValue operator-(const CertifiedValue& x, const CertifiedValue& y) {
  return {x.value - y.value, x.err + y.err, x.roundoff + y.roundoff};
}

inline CertifiedValue operator+(const CertifiedValue& x, const CertifiedValue& y) {
  return {x.value + y.value, x.err + y.err, x.roundoff + y.roundoff};
}

inline CertifiedValue scale(const CertifiedValue& x, std::complex<double> s) {
  return {x.value * s, x.err * std::abs(s), x.roundoff * std::abs(s)};
}

/// A complex matrix with an entrywise truncation-error bound.
struct CertifiedMatrix {
  Eigen::MatrixXcd value;
  Eigen::MatrixXd err;

  Eigen::Index rows() const { return value.rows(); }
  Eigen::Index cols() const { return value.cols(); }
  CertifiedValue at(Eigen::Index i, Eigen::Index j) const { return {value(i, j), err(i, j)}; }
  double max_err() const { return err.size() ? err.maxCoeff() : 0.0; }
};

struct CertifiedVector {
  Eigen::VectorXcd value;
  Eigen::VectorXd err;

  Eigen::Index size() const { return value.size(); }
  CertifiedValue at(Eigen::Index i) const { return {value(i), err(i)}; }
};

}  // namespace thetanull
