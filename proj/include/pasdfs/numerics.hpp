// SPDX-License-Identifier: Apache-2.0
#pragma once

// Stable combinatorial primitives shared by every other module: log-space
// factorials, exact Stirling and binomial tables, half-integer Pochhammer
// products, odd double factorials, and associated Laguerre polynomials.

#include <cstdint>
#include <span>
#include <vector>

namespace pasdfs::numerics {

// Largest photon number any table-backed factorial must serve.
inline constexpr int kMaxFactorialArg = 512;
// Largest moment order served by the exact Stirling table.
inline constexpr int kMaxStirlingOrder = 16;
// Largest n for which binomial(n, k) is returned exactly in 64 bits.
inline constexpr int kMaxBinomialArg = 62;

// ln(m!) precomputed once as a cumulative sum of ln(m), so differences of
// nearby entries reproduce sums of ln terms with correlated rounding.
class LogFactorialTable {
 public:
  explicit LogFactorialTable(int max_arg);

  // ln(m!); throws CapacityError for m outside [0, max_arg].
  double operator()(int m) const;

  int max_arg() const noexcept { return max_arg_; }
  std::span<const double> values() const noexcept { return values_; }

 private:
  int max_arg_;
  std::vector<double> values_;
};

// Shared immutable table covering [0, kMaxFactorialArg].
const LogFactorialTable& log_factorial_table();

// ln(m!) from the shared table.
double log_factorial(int m);

// Stirling numbers of the second kind, exact 64-bit integers.  Construction
// refuses max_order > 25, past which entries overflow 64 bits.
class Stirling2Table {
 public:
  explicit Stirling2Table(int max_order);

  // S2(e, f); zero for f > e, throws CapacityError for e > max_order.
  std::uint64_t operator()(int e, int f) const;

  int max_order() const noexcept { return max_order_; }

 private:
  int max_order_;
  std::vector<std::vector<std::uint64_t>> rows_;
};

// Shared immutable table covering orders [0, kMaxStirlingOrder].
const Stirling2Table& stirling2_table();

// S2(e, f) from the shared table.
std::uint64_t stirling2(int e, int f);

// Exact binomial coefficient; k outside [0, n] yields 0, n beyond
// kMaxBinomialArg throws CapacityError.
std::uint64_t binomial(int n, int k);

// Pochhammer product (1/2)(3/2)...((l-1)/2) of length l/2, the vacuum value
// of the even-order quadrature central moment scaled by 2^{l/2}.  Requires
// even l >= 2; odd or non-positive l throws std::domain_error.
double pochhammer_half(int l);

// (2i-1)!! with the empty-product convention (-1)!! = 1; requires i >= 0.
double odd_double_factorial(int i);

// Associated Laguerre polynomial L_p^{(s)}(x) by the ascending three-term
// recurrence.  Requires p >= 0 and x >= 0; the result must stay finite.
double assoc_laguerre(int p, int s, double x);

}  // namespace pasdfs::numerics
