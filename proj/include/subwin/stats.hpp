// stats.hpp -- shared numerical routines: log binomial coefficients,
// the regularized incomplete beta function, and the F distribution.
#pragma once

#include <cstddef>

namespace subwin {

// log C(n, k), computed through lgamma so large n stays finite.
double log_binomial_coefficient(std::size_t n, std::size_t k);

// Regularized incomplete beta function I_x(a, b) for a, b > 0 and
// x in [0, 1]. Continued-fraction evaluation (modified Lentz), accurate
// to better than 1e-12 over the parameter ranges used here.
double regularized_incomplete_beta(double a, double b, double x);

// Upper tail of the F distribution: P(F_{d1,d2} >= f).
// Computed as I_{d2/(d2 + d1 f)}(d2/2, d1/2).
double f_distribution_sf(double f, double d1, double d2);

}  // namespace subwin
