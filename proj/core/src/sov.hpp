#pragma once

// Separation-of-variables transform for Gaussian rectangle probabilities
// (Genz). Internal to the numerics sources; not installed.

#include <algorithm>
#include <cmath>
#include <vector>

#include <Eigen/Dense>

#include "skewfit/linalg.hpp"
#include "skewfit/special.hpp"

namespace skewfit::detail {

// Rectangle probability machinery for Z ~ N(0, Sigma) over {a <= Z <= b}.
// Variables are greedily reordered (smallest conditional mass first) while the
// Cholesky factor is built, which concentrates the integrand's variation in
// the leading lattice coordinates.
class SovRectangle {
 public:
  static constexpr int kMaxDim = 32;

  SovRectangle(Eigen::VectorXd lower, Eigen::VectorXd upper,
               const SpdMatrix& sigma)
      : d_(static_cast<int>(lower.size())),
        a_(std::move(lower)),
        b_(std::move(upper)) {
    Eigen::MatrixXd s = sigma.matrix();
    perm_.resize(static_cast<std::size_t>(d_));
    for (int i = 0; i < d_; ++i) perm_[static_cast<std::size_t>(i)] = i;
    chol_ = Eigen::MatrixXd::Zero(d_, d_);

    // Conditional expectations of visited coordinates; ordering heuristic only.
    Eigen::VectorXd y = Eigen::VectorXd::Zero(d_);

    for (int i = 0; i < d_; ++i) {
      int best = i;
      double best_mass = 2.0;
      for (int j = i; j < d_; ++j) {
        double cond_var = s(j, j);
        double cond_mean = 0.0;
        for (int k = 0; k < i; ++k) {
          cond_var -= chol_(j, k) * chol_(j, k);
          cond_mean += chol_(j, k) * y[k];
        }
        const double sd = std::sqrt(std::max(cond_var, 0.0));
        const double mass = interval_mass(a_[j], b_[j], cond_mean, sd);
        if (mass < best_mass) {
          best_mass = mass;
          best = j;
        }
      }
      if (best != i) {
        s.row(i).swap(s.row(best));
        s.col(i).swap(s.col(best));
        chol_.row(i).swap(chol_.row(best));
        std::swap(a_[i], a_[best]);
        std::swap(b_[i], b_[best]);
        std::swap(perm_[static_cast<std::size_t>(i)],
                  perm_[static_cast<std::size_t>(best)]);
      }

      double cond_var = s(i, i);
      double cond_mean = 0.0;
      for (int k = 0; k < i; ++k) {
        cond_var -= chol_(i, k) * chol_(i, k);
        cond_mean += chol_(i, k) * y[k];
      }
      const double cii = std::sqrt(std::max(cond_var, 0.0));
      chol_(i, i) = cii;
      if (cii > 0.0) {
        for (int j = i + 1; j < d_; ++j) {
          double v = s(j, i);
          for (int k = 0; k < i; ++k) v -= chol_(j, k) * chol_(i, k);
          chol_(j, i) = v / cii;
        }
        y[i] = truncated_mean(a_[i], b_[i], cond_mean, cii);
      } else {
        y[i] = 0.0;
      }
    }
  }

  int dim() const { return d_; }

  // Integrand for the rectangle probability; consumes u[0..d-2] (the last
  // conditional mass needs no fresh variable). Bounds are multiplied by
  // `scale`, which carries the gamma-mixture factor for t laws.
  double weight(const double* u, double scale) const {
    double f = 1.0;
    double y[kMaxDim];
    for (int i = 0; i < d_; ++i) {
      double c = 0.0;
      for (int k = 0; k < i; ++k) c += chol_(i, k) * y[k];
      double lo, hi;
      interval(i, c, scale, lo, hi);
      const double mass = hi - lo;
      if (!(mass > 0.0)) return 0.0;
      f *= mass;
      if (i + 1 < d_) y[i] = quantile_within(lo, hi, u[i]);
    }
    return f;
  }

  // Integrand plus the sampled point; consumes u[0..d-1] and writes z in the
  // caller's original coordinate order.
  double weight_and_point(const double* u, double scale, double* z) const {
    double f = 1.0;
    double y[kMaxDim];
    for (int i = 0; i < d_; ++i) {
      double c = 0.0;
      for (int k = 0; k < i; ++k) c += chol_(i, k) * y[k];
      double lo, hi;
      interval(i, c, scale, lo, hi);
      const double mass = hi - lo;
      if (mass > 0.0) {
        f *= mass;
        y[i] = quantile_within(lo, hi, u[i]);
      } else {
        f = 0.0;
        y[i] = 0.0;
      }
    }
    for (int i = 0; i < d_; ++i) {
      double v = 0.0;
      for (int k = 0; k <= i; ++k) v += chol_(i, k) * y[k];
      z[perm_[static_cast<std::size_t>(i)]] = v;
    }
    return f;
  }

 private:
  static double interval_mass(double a, double b, double mean, double sd) {
    if (sd <= 0.0) return (a <= mean && mean <= b) ? 1.0 : 0.0;
    const double lo = (a == -kInf) ? 0.0 : normal_cdf((a - mean) / sd);
    const double hi = (b == kInf) ? 1.0 : normal_cdf((b - mean) / sd);
    return std::max(hi - lo, 0.0);
  }

  // E[Z | alpha < Z < beta] for the standardized truncation interval.
  static double truncated_mean(double a, double b, double mean, double sd) {
    const double alpha = (a == -kInf) ? -kInf : (a - mean) / sd;
    const double beta = (b == kInf) ? kInf : (b - mean) / sd;
    const double pa = (alpha == -kInf) ? 0.0 : normal_cdf(alpha);
    const double pb = (beta == kInf) ? 1.0 : normal_cdf(beta);
    const double mass = pb - pa;
    if (mass <= 1e-300) return 0.0;
    const double da = (alpha == -kInf) ? 0.0 : normal_pdf(alpha);
    const double db = (beta == kInf) ? 0.0 : normal_pdf(beta);
    return (da - db) / mass;
  }

  // Conditional CDF interval [lo, hi] for coordinate i given offset c.
  void interval(int i, double c, double scale, double& lo, double& hi) const {
    const double cii = chol_(i, i);
    const double a = (a_[i] == -kInf) ? -kInf : a_[i] * scale;
    const double b = (b_[i] == kInf) ? kInf : b_[i] * scale;
    if (cii > 0.0) {
      lo = (a == -kInf) ? 0.0 : normal_cdf((a - c) / cii);
      hi = (b == kInf) ? 1.0 : normal_cdf((b - c) / cii);
    } else {
      // Deterministic coordinate: mass is 0 or 1.
      lo = 0.0;
      hi = (a <= c && c <= b) ? 1.0 : 0.0;
    }
  }

  static double clamp_p(double p) { return std::clamp(p, 1e-300, 1.0 - 1e-16); }

  static double quantile_within(double lo, double hi, double u) {
    return normal_quantile(clamp_p(lo + u * (hi - lo)));
  }

  int d_;
  Eigen::VectorXd a_;
  Eigen::VectorXd b_;
  Eigen::MatrixXd chol_;
  std::vector<int> perm_;
};

}  // namespace skewfit::detail
