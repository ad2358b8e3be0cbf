// SPDX-License-Identifier: Apache-2.0
#include <cmath>
#include <cstdint>
#include <vector>

#include "doctest.h"
#include "pasdfs/errors.hpp"
#include "pasdfs/numerics.hpp"
#include "test_helpers.hpp"

namespace nm = pasdfs::numerics;

namespace {

std::uint64_t exact_factorial(int m) {
  std::uint64_t f = 1;
  for (int i = 2; i <= m; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

// Surjection count / f! by inclusion-exclusion: an independent route to the
// Stirling partition numbers.
std::uint64_t stirling_by_surjections(int e, int f) {
  long double surjections = 0.0L;
  for (int i = 0; i <= f; ++i) {
    long double binom = 1.0L;
    for (int j = 0; j < i; ++j) binom = binom * (f - j) / (j + 1);
    const long double term = binom * std::pow(static_cast<long double>(f - i),
                                              static_cast<long double>(e));
    surjections += (i % 2 == 0) ? term : -term;
  }
  return static_cast<std::uint64_t>(
      std::llround(static_cast<double>(surjections / exact_factorial(f))));
}

// Series form sum_i (-1)^i C(p+s, p-i) x^i / i! in extended precision.
long double laguerre_series(int p, int s, long double x) {
  long double acc = 0.0L;
  for (int i = 0; i <= p; ++i) {
    long double binom = 1.0L;  // C(p+s, p-i) built as a product
    for (int j = 0; j < p - i; ++j)
      binom = binom * (static_cast<long double>(s + i) + 1.0L + j) / (j + 1);
    long double fact = 1.0L;
    for (int j = 2; j <= i; ++j) fact *= j;
    const long double term = binom * std::pow(x, i) / fact;
    acc += (i % 2 == 0) ? term : -term;
  }
  return acc;
}

}  // namespace

TEST_CASE("log_factorial matches exact factorials and ln steps") {
  CHECK(nm::log_factorial(0) == 0.0);
  CHECK(nm::log_factorial(1) == 0.0);
  CHECK(nm::log_factorial(10) ==
        doctest::Approx(std::log(3628800.0)).epsilon(1e-14));
  for (int m = 2; m <= 20; ++m) {
    const double rel = std::exp(nm::log_factorial(m)) /
                           static_cast<double>(exact_factorial(m)) - 1.0;
    CHECK(std::abs(rel) < 1e-12);
  }
  for (int m = 1; m <= nm::kMaxFactorialArg; ++m) {
    const double diff = nm::log_factorial(m) - nm::log_factorial(m - 1);
    CHECK(diff == doctest::Approx(std::log(static_cast<double>(m))).epsilon(1e-12));
  }
  CHECK_THROWS_AS(nm::log_factorial(nm::kMaxFactorialArg + 1), pasdfs::CapacityError);
  CHECK_THROWS_AS(nm::log_factorial(-1), pasdfs::CapacityError);
}

TEST_CASE("stirling2 matches the surjection oracle and the power identity") {
  CHECK(nm::stirling2(0, 0) == 1);
  CHECK(nm::stirling2(3, 2) == 3);
  CHECK(nm::stirling2(4, 2) == 7);
  for (int e = 1; e <= 10; ++e)
    for (int f = 1; f <= e; ++f)
      CHECK(nm::stirling2(e, f) == stirling_by_surjections(e, f));
  for (int e = 0; e <= nm::kMaxStirlingOrder; ++e)
    CHECK(nm::stirling2(e, e + 1) == 0);

  // sum_f S2(e, f) x^(x-1)...(x-f+1) = x^e with exact integer arithmetic.
  for (int e = 1; e <= nm::kMaxStirlingOrder; ++e) {
    for (std::uint64_t x = 1; x <= 6; ++x) {
      std::uint64_t lhs = 0;
      for (int f = 1; f <= e; ++f) {
        std::uint64_t falling = 1;
        for (int j = 0; j < f; ++j)
          falling *= (x >= static_cast<std::uint64_t>(j) + 1)
                         ? x - static_cast<std::uint64_t>(j)
                         : 0;
        lhs += nm::stirling2(e, f) * falling;
      }
      std::uint64_t rhs = 1;
      for (int j = 0; j < e; ++j) rhs *= x;
      CHECK(lhs == rhs);
    }
  }
  CHECK_THROWS_AS(nm::stirling2(nm::kMaxStirlingOrder + 1, 1), pasdfs::CapacityError);
  CHECK_THROWS_AS(nm::Stirling2Table(26), pasdfs::CapacityError);
}

TEST_CASE("binomial is exact and follows the Pascal recurrence") {
  CHECK(nm::binomial(0, 0) == 1);
  CHECK(nm::binomial(6, 2) == 15);
  CHECK(nm::binomial(10, 10) == 1);
  CHECK(nm::binomial(10, 11) == 0);
  CHECK(nm::binomial(62, 31) == 465428353255261088ULL);
  for (int n = 1; n <= 20; ++n)
    for (int k = 1; k <= n; ++k)
      CHECK(nm::binomial(n, k) == nm::binomial(n - 1, k - 1) + nm::binomial(n - 1, k));
  CHECK_THROWS_AS(nm::binomial(63, 1), pasdfs::CapacityError);
}

TEST_CASE("pochhammer_half gives the even-order vacuum quadrature baseline") {
  CHECK(nm::pochhammer_half(2) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(nm::pochhammer_half(4) == doctest::Approx(0.75).epsilon(1e-15));
  CHECK(nm::pochhammer_half(6) == doctest::Approx(1.875).epsilon(1e-15));
  CHECK_THROWS_AS(nm::pochhammer_half(3), std::domain_error);
  CHECK_THROWS_AS(nm::pochhammer_half(0), std::domain_error);
}

TEST_CASE("odd_double_factorial walks 1, 1, 3, 15, 105") {
  CHECK(nm::odd_double_factorial(0) == 1.0);
  CHECK(nm::odd_double_factorial(1) == 1.0);
  CHECK(nm::odd_double_factorial(2) == 3.0);
  CHECK(nm::odd_double_factorial(3) == 15.0);
  CHECK(nm::odd_double_factorial(4) == 105.0);
  CHECK_THROWS_AS(nm::odd_double_factorial(-1), std::domain_error);
}

TEST_CASE("assoc_laguerre matches the explicit series") {
  CHECK(nm::assoc_laguerre(0, 3, 2.5) == 1.0);
  CHECK(nm::assoc_laguerre(1, 0, 2.0) == doctest::Approx(-1.0).epsilon(1e-14));
  // L_2^{(1)}(x) = 3 - 3x + x^2/2, so L_2^{(1)}(1) = 1/2.
  CHECK(nm::assoc_laguerre(2, 1, 1.0) == doctest::Approx(0.5).epsilon(1e-14));
  for (int trial = 0; trial < 200; ++trial) {
    const int p = static_cast<int>(test_helpers::uniform(0.0, 12.99));
    const int s = static_cast<int>(test_helpers::uniform(0.0, 40.99));
    const double x = test_helpers::uniform(0.0, 25.0);
    const double expected = static_cast<double>(laguerre_series(p, s, x));
    const double got = nm::assoc_laguerre(p, s, x);
    CHECK(std::abs(got - expected) < 1e-9 * (1.0 + std::abs(expected)));
  }
  CHECK_THROWS_AS(nm::assoc_laguerre(-1, 0, 1.0), std::domain_error);
  CHECK_THROWS_AS(nm::assoc_laguerre(2, 0, -1.0), std::domain_error);
}
