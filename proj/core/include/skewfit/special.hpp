#pragma once

#include <limits>

namespace skewfit {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Treats nu >= this as the normal kernel when a caller asks for "effectively
// normal" classification; the math itself distinguishes only finite vs inf.
inline constexpr double kEffectivelyNormalDof = 1e4;

double normal_pdf(double x);
double normal_cdf(double x);
double normal_logcdf(double x);
double normal_quantile(double p);

// Central Student t, standardized (location 0, scale 1).
double student_t_pdf(double x, double nu);
double student_t_cdf(double x, double nu);

// Quantile of gamma(shape, rate).
double gamma_quantile(double p, double shape, double rate);

double lgamma_fn(double x);
double digamma_fn(double x);

}  // namespace skewfit
