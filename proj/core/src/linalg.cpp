#include "skewfit/linalg.hpp"

#include <cmath>

#include "skewfit/errors.hpp"

namespace skewfit {

SpdMatrix::SpdMatrix(Eigen::MatrixXd m) : m_(std::move(m)) {
  if (m_.rows() != m_.cols() || m_.rows() == 0) {
    throw NotPositiveDefinite("SpdMatrix: matrix must be square, nonempty");
  }
  const double scale = m_.cwiseAbs().maxCoeff();
  const double asym = (m_ - m_.transpose()).cwiseAbs().maxCoeff();
  if (!(asym <= 1e-12 * std::max(scale, 1.0))) {
    throw NotPositiveDefinite("SpdMatrix: matrix is not symmetric");
  }
  Eigen::LLT<Eigen::MatrixXd> llt(m_);
  if (llt.info() != Eigen::Success) {
    throw NotPositiveDefinite("SpdMatrix: Cholesky factorization failed");
  }
  lower_ = llt.matrixL();
  log_det_ = 2.0 * lower_.diagonal().array().log().sum();
  if (!std::isfinite(log_det_)) {
    throw NotPositiveDefinite("SpdMatrix: non-finite determinant");
  }
}

Eigen::MatrixXd SpdMatrix::solve(const Eigen::MatrixXd& b) const {
  if (b.rows() != dim()) {
    throw DimensionMismatch("SpdMatrix::solve: row count mismatch");
  }
  Eigen::MatrixXd x = lower_.triangularView<Eigen::Lower>().solve(b);
  lower_.triangularView<Eigen::Lower>().transpose().solveInPlace(x);
  return x;
}

Eigen::VectorXd SpdMatrix::solve(const Eigen::VectorXd& b) const {
  return solve(Eigen::MatrixXd(b)).col(0);
}

double SpdMatrix::mahalanobis_sq(const Eigen::VectorXd& x,
                                 const Eigen::VectorXd& mu) const {
  if (x.size() != dim() || mu.size() != dim()) {
    throw DimensionMismatch("mahalanobis_sq: vector size mismatch");
  }
  Eigen::VectorXd z =
      lower_.triangularView<Eigen::Lower>().solve((x - mu).eval());
  return z.squaredNorm();
}

Eigen::MatrixXd chol_solve(const SpdMatrix& a, const Eigen::MatrixXd& b) {
  return a.solve(b);
}

}  // namespace skewfit
