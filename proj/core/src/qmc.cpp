#include "skewfit/qmc.hpp"

#include <cmath>

#include "skewfit/errors.hpp"
#include "skewfit/rng.hpp"

namespace skewfit {

namespace {
constexpr int kPrimes[] = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41,
                           43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97};
constexpr int kMaxDim = static_cast<int>(std::size(kPrimes));
}  // namespace

void QmcSpec::validate() const {
  if (point_count < 128) throw Error("QmcSpec: point_count must be >= 128");
  if (randomization_count < 4) {
    throw Error("QmcSpec: randomization_count must be >= 4");
  }
}

KroneckerRule::KroneckerRule(int dim, const QmcSpec& spec)
    : dim_(dim), points_(spec.point_count) {
  spec.validate();
  if (dim < 1 || dim > kMaxDim) {
    throw DimensionMismatch("KroneckerRule: dimension out of range");
  }
  gen_.resize(static_cast<std::size_t>(dim));
  for (int c = 0; c < dim; ++c) {
    const double s = std::sqrt(static_cast<double>(kPrimes[c]));
    gen_[static_cast<std::size_t>(c)] = s - std::floor(s);
  }
  shifts_.resize(static_cast<std::size_t>(spec.randomization_count));
  for (int r = 0; r < spec.randomization_count; ++r) {
    Rng rng(derive_seed(spec.seed, "qmc-shift",
                        static_cast<std::uint64_t>(r) * 1024 +
                            static_cast<std::uint64_t>(dim)));
    auto& row = shifts_[static_cast<std::size_t>(r)];
    row.resize(static_cast<std::size_t>(dim));
    for (int c = 0; c < dim; ++c) row[static_cast<std::size_t>(c)] = rng.uniform();
  }
}

std::pair<double, double> KroneckerRule::combine(
    const std::vector<double>& means) {
  const auto m = static_cast<double>(means.size());
  double mean = 0.0;
  for (const double v : means) mean += v;
  mean /= m;
  double var = 0.0;
  for (const double v : means) var += (v - mean) * (v - mean);
  var /= m * (m - 1.0);
  return {mean, 3.0 * std::sqrt(var)};
}

}  // namespace skewfit
