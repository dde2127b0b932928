#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace ghgkit::special {

// Lanczos log-gamma (g=7, 9 coefficients), accurate to ~1e-14 for x > 0.
double log_gamma(double x);

double digamma(double x);
double trigamma(double x);

// Regularized lower incomplete gamma P(a, x).
double reg_lower_gamma(double a, double x);

// Inverse of the standard normal CDF (Acklam's rational approximation
// polished by one Halley step).
double normal_quantile(double p);

// Gauss-Legendre nodes/weights on [-1, 1]; cached per order.
const std::pair<std::vector<double>, std::vector<double>>& gauss_legendre(size_t n);

}  // namespace ghgkit::special
