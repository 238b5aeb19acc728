// Numerical routines checked against independent oracles: exact factorial
// binomial sums and adaptive Simpson quadrature.
#include <cmath>
#include <functional>

#include "doctest.h"
#include "subwin/stats.hpp"

using subwin::f_distribution_sf;
using subwin::log_binomial_coefficient;
using subwin::regularized_incomplete_beta;

namespace {

long double choose_exact(int n, int k) {
  long double c = 1.0L;
  for (int i = 0; i < k; ++i) c = c * (long double)(n - i) / (long double)(i + 1);
  return c;
}

// Upper binomial tail with exact coefficients; the identity
// I_p(a, b) = P(X >= a) for X ~ Bin(a+b-1, p) is an independent route
// to the incomplete beta at integer parameters.
long double binom_tail_exact(int r, int n, long double p) {
  long double sum = 0.0L;
  for (int k = r; k <= n; ++k)
    sum += choose_exact(n, k) * powl(p, k) * powl(1.0L - p, n - k);
  return sum;
}

double simpson(const std::function<double(double)>& f, double a, double b, int n) {
  const double h = (b - a) / n;
  double sum = f(a) + f(b);
  for (int i = 1; i < n; ++i) sum += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
  return sum * h / 3.0;
}

}  // namespace

TEST_CASE("log binomial coefficient") {
  CHECK(std::exp(log_binomial_coefficient(8, 3)) == doctest::Approx(56.0).epsilon(1e-10));
  CHECK(std::exp(log_binomial_coefficient(10, 0)) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::exp(log_binomial_coefficient(10, 10)) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK_THROWS(log_binomial_coefficient(3, 4));
}

TEST_CASE("incomplete beta reduces to x at a=b=1") {
  for (double x : {0.0, 0.1, 0.25, 0.5, 0.75, 0.9, 1.0})
    CHECK(regularized_incomplete_beta(1.0, 1.0, x) == doctest::Approx(x).epsilon(1e-13));
}

TEST_CASE("incomplete beta matches the exact binomial identity") {
  for (int a : {1, 2, 3, 5, 8}) {
    for (int b : {1, 2, 4, 7}) {
      const int n = a + b - 1;
      for (double p : {0.05, 0.2, 0.5, 0.73, 0.95}) {
        const double expected = double(binom_tail_exact(a, n, (long double)p));
        CHECK(regularized_incomplete_beta(a, b, p) ==
              doctest::Approx(expected).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("incomplete beta matches quadrature at non-integer parameters") {
  struct Case {
    double a, b, x;
  };
  for (const Case& c :
       {Case{2.5, 3.5, 0.3}, Case{7.5, 2.0, 0.8}, Case{12.5, 4.5, 0.6}, Case{1.5, 6.0, 0.15}}) {
    const double log_beta = std::lgamma(c.a) + std::lgamma(c.b) - std::lgamma(c.a + c.b);
    auto integrand = [&](double t) {
      if (t <= 0.0 || t >= 1.0) return 0.0;
      return std::exp((c.a - 1.0) * std::log(t) + (c.b - 1.0) * std::log1p(-t) - log_beta);
    };
    const double expected = simpson(integrand, 0.0, c.x, 200000);
    CHECK(regularized_incomplete_beta(c.a, c.b, c.x) ==
          doctest::Approx(expected).epsilon(1e-8));
  }
}

TEST_CASE("incomplete beta arcsine closed form at a=b=1/2") {
  for (double x : {0.05, 0.42, 0.5, 0.88}) {
    const double expected = (2.0 / M_PI) * std::asin(std::sqrt(x));
    CHECK(regularized_incomplete_beta(0.5, 0.5, x) ==
          doctest::Approx(expected).epsilon(1e-12));
  }
}

TEST_CASE("incomplete beta domain") {
  CHECK(regularized_incomplete_beta(2, 3, 0.0) == 0.0);
  CHECK(regularized_incomplete_beta(2, 3, 1.0) == 1.0);
  CHECK_THROWS(regularized_incomplete_beta(0.0, 1.0, 0.5));
  CHECK_THROWS(regularized_incomplete_beta(1.0, -2.0, 0.5));
  CHECK_THROWS(regularized_incomplete_beta(1.0, 1.0, 1.5));
}

TEST_CASE("F distribution upper tail") {
  // Worked value: Q(1.25 | 25, 15) = 0.332373.
  CHECK(f_distribution_sf(1.25, 25, 15) == doctest::Approx(0.332373).epsilon(2e-6));
  CHECK(f_distribution_sf(0.0, 3, 7) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(f_distribution_sf(std::numeric_limits<double>::infinity(), 3, 7) == 0.0);
  // Reciprocal identity of the F distribution.
  for (double f : {0.2, 0.7, 1.0, 2.5, 9.0})
    CHECK(f_distribution_sf(f, 4, 9) ==
          doctest::Approx(1.0 - f_distribution_sf(1.0 / f, 9, 4)).epsilon(1e-12));
  CHECK_THROWS(f_distribution_sf(-1.0, 3, 3));
  CHECK_THROWS(f_distribution_sf(1.0, 0, 3));
}
