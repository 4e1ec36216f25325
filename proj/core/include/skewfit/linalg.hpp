#pragma once

#include <Eigen/Dense>

namespace skewfit {

// Symmetric positive definite matrix. Validates symmetry and factorizability
// on construction and keeps the Cholesky factor for solves and determinants.
class SpdMatrix {
 public:
  // Throws NotPositiveDefinite if m is not symmetric (1e-12 relative) or the
  // factorization encounters a non-positive pivot.
  explicit SpdMatrix(Eigen::MatrixXd m);

  Eigen::Index dim() const { return m_.rows(); }
  const Eigen::MatrixXd& matrix() const { return m_; }

  // Lower-triangular factor L with L L^T = M.
  const Eigen::MatrixXd& chol_lower() const { return lower_; }

  double log_det() const { return log_det_; }

  Eigen::MatrixXd solve(const Eigen::MatrixXd& b) const;
  Eigen::VectorXd solve(const Eigen::VectorXd& b) const;

  // (x - mu)^T M^{-1} (x - mu) via one triangular solve.
  double mahalanobis_sq(const Eigen::VectorXd& x,
                        const Eigen::VectorXd& mu) const;

 private:
  Eigen::MatrixXd m_;
  Eigen::MatrixXd lower_;
  double log_det_ = 0.0;
};

// Solves a x = b for SPD a.
Eigen::MatrixXd chol_solve(const SpdMatrix& a, const Eigen::MatrixXd& b);

}  // namespace skewfit
