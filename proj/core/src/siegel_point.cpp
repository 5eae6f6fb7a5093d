#include "thetanull/siegel_point.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>

#include "thetanull/errors.hpp"

namespace thetanull {

namespace {

bool imag_is_positive_definite(const ComplexMatrix& tau) {
  const RealMatrix im = tau.imag();
  if (!im.allFinite()) return false;
  Eigen::LLT<RealMatrix> llt(im);
  if (llt.info() != Eigen::Success) return false;
  // LLT reports success for some semidefinite inputs; require a strictly
  // positive pivot.
  return (llt.matrixLLT().diagonal().array() > 0.0).all();
}

}  // namespace

SiegelPoint SiegelPoint::validate(int genus, const ComplexMatrix& raw) {
  if (genus < 1 || raw.rows() != genus || raw.cols() != genus) {
    throw Error(ErrorKind::GenusMismatch, "expected a " + std::to_string(genus) + "x" +
                                              std::to_string(genus) + " matrix");
  }
  if (!raw.allFinite()) throw Error(ErrorKind::NotPositiveDefinite, "non-finite entry");
  const double scale = raw.cwiseAbs().maxCoeff();
  const double asym = (raw - raw.transpose()).cwiseAbs().maxCoeff();
  if (asym > kSymmetryTolerance * scale) {
    throw Error(ErrorKind::NotSymmetric, "asymmetry " + std::to_string(asym) + " exceeds tolerance");
  }
  ComplexMatrix sym = 0.5 * (raw + raw.transpose());
  if (!imag_is_positive_definite(sym)) {
    throw Error(ErrorKind::NotPositiveDefinite, "imaginary part is not positive definite");
  }
  return SiegelPoint(std::move(sym));
}

SiegelPoint make_siegel_unchecked_symmetry(ComplexMatrix raw) {
  ComplexMatrix sym = 0.5 * (raw + raw.transpose());
  if (!imag_is_positive_definite(sym)) {
    throw Error(ErrorKind::LeftSiegelSpace, "imaginary part is not positive definite");
  }
  return SiegelPoint(std::move(sym));
}

SiegelPoint SiegelPoint::with_entry(int i, int j, Complex value) const {
  ComplexMatrix next = tau_;
  next(i, j) = value;
  next(j, i) = value;
  return make_siegel_unchecked_symmetry(std::move(next));
}

SiegelPoint block_diag(const SiegelPoint& t1, const SiegelPoint& t2) {
  const int g1 = t1.genus();
  const int g2 = t2.genus();
  ComplexMatrix out = ComplexMatrix::Zero(g1 + g2, g1 + g2);
  out.topLeftCorner(g1, g1) = t1.matrix();
  out.bottomRightCorner(g2, g2) = t2.matrix();
  return SiegelPoint::validate(g1 + g2, out);
}

HalfPeriod point_of_order_two(const SiegelPoint& tau, const Characteristic& ch) {
  const int g = tau.genus();
  if (ch.genus() != g) throw Error(ErrorKind::GenusMismatch, "characteristic genus differs from tau");
  ComplexVector eps(g), delta(g);
  for (int i = 0; i < g; ++i) {
    eps(i) = 0.5 * ch.eps(i);
    delta(i) = 0.5 * ch.delta(i);
  }
  return {tau.matrix() * eps + delta};
}

double min_imag_eigenvalue(const SiegelPoint& tau) {
  Eigen::SelfAdjointEigenSolver<RealMatrix> es(tau.imag(), Eigen::EigenvaluesOnly);
  return es.eigenvalues()(0);
}

}  // namespace thetanull
