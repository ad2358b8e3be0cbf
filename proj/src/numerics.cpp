// SPDX-License-Identifier: Apache-2.0
#include "pasdfs/numerics.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "pasdfs/errors.hpp"

namespace pasdfs::numerics {

namespace {

// Entries of S2 rows above this order exceed 64 bits.
constexpr int kStirlingExactLimit = 25;

[[noreturn]] void throw_capacity(const char* what, int arg, int bound) {
  throw CapacityError(std::string(what) + ": argument " + std::to_string(arg) +
                      " exceeds capacity " + std::to_string(bound));
}

}  // namespace

LogFactorialTable::LogFactorialTable(int max_arg) : max_arg_(max_arg) {
  if (max_arg < 0) throw std::invalid_argument("LogFactorialTable: negative size");
  values_.resize(static_cast<std::size_t>(max_arg) + 1);
  long double acc = 0.0L;
  values_[0] = 0.0;
  for (int m = 1; m <= max_arg; ++m) {
    acc += std::log(static_cast<long double>(m));
    values_[static_cast<std::size_t>(m)] = static_cast<double>(acc);
  }
}

double LogFactorialTable::operator()(int m) const {
  if (m < 0 || m > max_arg_) throw_capacity("log_factorial", m, max_arg_);
  return values_[static_cast<std::size_t>(m)];
}

const LogFactorialTable& log_factorial_table() {
  static const LogFactorialTable table(kMaxFactorialArg);
  return table;
}

double log_factorial(int m) { return log_factorial_table()(m); }

Stirling2Table::Stirling2Table(int max_order) : max_order_(max_order) {
  if (max_order < 0) throw std::invalid_argument("Stirling2Table: negative size");
  if (max_order > kStirlingExactLimit)
    throw_capacity("Stirling2Table", max_order, kStirlingExactLimit);
  rows_.resize(static_cast<std::size_t>(max_order) + 1);
  rows_[0] = {1};  // S2(0, 0) = 1 by the empty-partition convention.
  for (int e = 1; e <= max_order; ++e) {
    auto& row = rows_[static_cast<std::size_t>(e)];
    const auto& prev = rows_[static_cast<std::size_t>(e - 1)];
    row.assign(static_cast<std::size_t>(e) + 1, 0);
    for (int f = 1; f <= e; ++f) {
      const std::uint64_t lower = (f <= e - 1) ? prev[static_cast<std::size_t>(f)] : 0;
      const std::uint64_t diag = prev[static_cast<std::size_t>(f - 1)];
      row[static_cast<std::size_t>(f)] = static_cast<std::uint64_t>(f) * lower + diag;
    }
  }
}

std::uint64_t Stirling2Table::operator()(int e, int f) const {
  if (e < 0 || e > max_order_) throw_capacity("stirling2", e, max_order_);
  if (f < 0 || f > e) return 0;
  return rows_[static_cast<std::size_t>(e)][static_cast<std::size_t>(f)];
}

const Stirling2Table& stirling2_table() {
  static const Stirling2Table table(kMaxStirlingOrder);
  return table;
}

std::uint64_t stirling2(int e, int f) { return stirling2_table()(e, f); }

std::uint64_t binomial(int n, int k) {
  if (n < 0) throw std::invalid_argument("binomial: negative n");
  if (n > kMaxBinomialArg) throw_capacity("binomial", n, kMaxBinomialArg);
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  // Row-by-row Pascal update keeps every intermediate exact in 64 bits.
  std::uint64_t value = 1;
  for (int i = 1; i <= k; ++i) {
    value = value * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  }
  return value;
}

double pochhammer_half(int l) {
  if (l < 2 || l % 2 != 0)
    throw std::domain_error("pochhammer_half: order must be even and >= 2");
  double value = 1.0;
  for (int i = 0; i < l / 2; ++i) value *= 0.5 + static_cast<double>(i);
  return value;
}

double odd_double_factorial(int i) {
  if (i < 0) throw std::domain_error("odd_double_factorial: negative index");
  double value = 1.0;
  for (int j = 1; j <= i; ++j) value *= static_cast<double>(2 * j - 1);
  return value;
}

double assoc_laguerre(int p, int s, double x) {
  if (p < 0) throw std::domain_error("assoc_laguerre: negative degree");
  if (x < 0.0) throw std::domain_error("assoc_laguerre: negative argument");
  const double shift = static_cast<double>(s);
  double prev = 1.0;  // L_0
  if (p == 0) return prev;
  double curr = 1.0 + shift - x;  // L_1
  for (int i = 1; i < p; ++i) {
    const double next =
        ((2.0 * i + 1.0 + shift - x) * curr - (static_cast<double>(i) + shift) * prev) /
        (static_cast<double>(i) + 1.0);
    prev = curr;
    curr = next;
  }
  if (!std::isfinite(curr)) throw std::overflow_error("assoc_laguerre: overflow");
  return curr;
}

}  // namespace pasdfs::numerics
