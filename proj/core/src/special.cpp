#include "skewfit/special.hpp"

#include <cmath>

#include <boost/math/distributions/students_t.hpp>
#include <boost/math/special_functions/digamma.hpp>
#include <boost/math/special_functions/erf.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include "skewfit/errors.hpp"

namespace skewfit {

namespace {
constexpr double kInvSqrt2 = 0.7071067811865475244;
constexpr double kInvSqrt2Pi = 0.3989422804014326779;
}  // namespace

double normal_pdf(double x) { return kInvSqrt2Pi * std::exp(-0.5 * x * x); }

double normal_cdf(double x) {
  if (x == kInf) return 1.0;
  if (x == -kInf) return 0.0;
  return 0.5 * std::erfc(-x * kInvSqrt2);
}

double normal_logcdf(double x) {
  if (x > -8.0) return std::log(normal_cdf(x));
  // Deep lower tail: erfc underflows near x = -38, switch to the asymptotic
  // series log phi(x) - log|x| + log(1 - 1/x^2 + 3/x^4 - ...).
  if (x > -37.0) return std::log(0.5) + std::log(std::erfc(-x * kInvSqrt2));
  const double x2 = x * x;
  const double series = 1.0 - 1.0 / x2 + 3.0 / (x2 * x2);
  return -0.5 * x2 - 0.5 * std::log(2.0 * M_PI) - std::log(-x) +
         std::log(series);
}

double normal_quantile(double p) {
  if (!(p > 0.0 && p < 1.0)) {
    if (p == 0.0) return -kInf;
    if (p == 1.0) return kInf;
    throw Error("normal_quantile: p outside [0,1]");
  }
  // erf_inv is accurate over the full open interval.
  return -std::sqrt(2.0) * boost::math::erfc_inv(2.0 * p);
}

double student_t_pdf(double x, double nu) {
  if (nu == kInf) return normal_pdf(x);
  const double c = std::lgamma(0.5 * (nu + 1.0)) - std::lgamma(0.5 * nu) -
                   0.5 * std::log(nu * M_PI);
  return std::exp(c - 0.5 * (nu + 1.0) * std::log1p(x * x / nu));
}

double student_t_cdf(double x, double nu) {
  if (nu == kInf) return normal_cdf(x);
  if (nu <= 0.0) throw InvalidDof("student_t_cdf: nu must be positive");
  if (x == kInf) return 1.0;
  if (x == -kInf) return 0.0;
  boost::math::students_t dist(nu);
  return boost::math::cdf(dist, x);
}

double gamma_quantile(double p, double shape, double rate) {
  if (shape <= 0.0 || rate <= 0.0) {
    throw Error("gamma_quantile: shape and rate must be positive");
  }
  return boost::math::gamma_p_inv(shape, p) / rate;
}

double lgamma_fn(double x) { return std::lgamma(x); }

double digamma_fn(double x) { return boost::math::digamma(x); }

}  // namespace skewfit
