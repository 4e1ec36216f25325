#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

namespace skewfit {

// Budget for one randomized quasi-Monte Carlo estimate. Fixing the spec fixes
// the result bit-for-bit; the randomization count drives the error estimate.
struct QmcSpec {
  int point_count = 512;
  std::uint64_t seed = 0;
  int randomization_count = 8;

  // Throws Error unless point_count >= 128 and randomization_count >= 4.
  void validate() const;
};

// Randomly shifted Kronecker lattice with a tent-map baker transform,
// generators frac(sqrt(p)) over the first primes. Shift vectors are a pure
// function of (spec.seed, dim), so integrals over equal dimensions share
// points — estimates vary smoothly with the integrand's parameters.
class KroneckerRule {
 public:
  KroneckerRule(int dim, const QmcSpec& spec);

  int dim() const { return dim_; }
  int points() const { return points_; }
  int randomizations() const { return static_cast<int>(shifts_.size()); }

  // Writes the dim coordinates of point j under randomization r into u;
  // every coordinate lies in (0, 1).
  void point(int r, int j, double* u) const {
    const double* shift = shifts_[static_cast<std::size_t>(r)].data();
    const double k = static_cast<double>(j + 1);
    for (int c = 0; c < dim_; ++c) {
      double x = k * gen_[static_cast<std::size_t>(c)] + shift[c];
      x -= std::floor(x);
      u[c] = std::fabs(2.0 * x - 1.0);
    }
  }

  // Combines per-randomization means into (estimate, 3-sigma error).
  static std::pair<double, double> combine(const std::vector<double>& means);

 private:
  int dim_;
  int points_;
  std::vector<double> gen_;
  std::vector<std::vector<double>> shifts_;
};

}  // namespace skewfit
