#pragma once

#include <cstdint>
#include <string_view>

#include <Eigen/Dense>

namespace skewfit {

// Counter-based 64-bit generator (splitmix64 core). All randomness in the
// library flows through this engine so that results are reproducible from a
// single seed on any platform; std::random distributions are avoided because
// their output is implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64();

  // Uniform on (0,1): never returns 0 or 1.
  double uniform();

  // Standard normal via inverse-CDF transform.
  double normal();

  // gamma(shape, rate) by Marsaglia-Tsang squeeze.
  double gamma(double shape, double rate);

  Eigen::VectorXd normal_vector(Eigen::Index n);

 private:
  std::uint64_t state_;
};

// Derives an independent stream from (seed, name, index). Used to hand out
// per-purpose seeds (starts, qmc shifts, samplers) from one master seed.
std::uint64_t derive_seed(std::uint64_t seed, std::string_view name,
                          std::uint64_t index = 0);

}  // namespace skewfit
