// SPDX-License-Identifier: Apache-2.0
#include "pasdfs/engineering.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "pasdfs/errors.hpp"
#include "pasdfs/numerics.hpp"

namespace pasdfs::engineering {

namespace {

constexpr double kAnnihilationThreshold = 1e-14;

void validate_eps(double eps) {
  if (!(eps > 0.0) || eps > kMaxTruncationEps)
    throw std::invalid_argument("truncation eps must lie in (0, 1e-6]");
}

// Retained length chosen so the edge amplitude of a displaced Fock state sits
// a dozen standard deviations past the photon-number mean: edge weights land
// near 1e-24, far below any accepted eps.
int truncation_length(double alpha_sq, int extra) {
  const double center = alpha_sq + static_cast<double>(extra);
  return static_cast<int>(std::ceil(center + 12.0 * std::sqrt(center + 1.0) + 30.0));
}

// Raw displaced-Fock coefficients <m|D(alpha)|n> for m in [0, max_index].
// Exact magnitudes are assembled in log space; the associated Laguerre factor
// carries the sign.
std::vector<Complex> dfs_raw(Complex alpha, int n, int max_index) {
  using numerics::assoc_laguerre;
  using numerics::log_factorial;
  const double a2 = std::norm(alpha);
  const double abs_a = std::sqrt(a2);
  const double log_a = std::log(abs_a);
  const double phi = std::arg(alpha);
  const double log_fn = log_factorial(n);
  std::vector<Complex> c(static_cast<std::size_t>(max_index) + 1);
  for (int m = 0; m <= max_index; ++m) {
    double lag, log_mag, phase;
    if (m >= n) {
      lag = assoc_laguerre(n, m - n, a2);
      log_mag = 0.5 * (log_fn - log_factorial(m)) + (m - n) * log_a - 0.5 * a2;
      phase = (m - n) * phi;
    } else {
      lag = assoc_laguerre(m, n - m, a2);
      log_mag = 0.5 * (log_factorial(m) - log_fn) + (n - m) * log_a - 0.5 * a2;
      phase = -(n - m) * phi;
      if ((n - m) % 2 != 0) lag = -lag;
    }
    const double mag = std::exp(log_mag) * std::abs(lag);
    const double signed_mag = lag < 0.0 ? -mag : mag;
    c[static_cast<std::size_t>(m)] = signed_mag * std::polar(1.0, phase);
  }
  return c;
}

int capacity_limit(int added) { return numerics::kMaxFactorialArg - added; }

}  // namespace

void validate(const StateSpec& spec) {
  const auto in_range = [](int v) { return v >= 0 && v <= kMaxLadderOps; };
  if (!in_range(spec.added) || !in_range(spec.subtracted) || !in_range(spec.fock))
    throw std::invalid_argument("StateSpec: ladder counts and seed photon number must lie in [0, " +
                                std::to_string(kMaxLadderOps) + "]");
}

fock::FockAmplitudes dfs_coefficients(Complex alpha, int n, double eps) {
  if (n < 0 || n > kMaxLadderOps)
    throw std::invalid_argument("dfs_coefficients: seed photon number out of range");
  validate_eps(eps);
  if (alpha == Complex{0.0, 0.0}) return fock::FockAmplitudes{n, {Complex{1.0, 0.0}}, 0.0};

  const double a2 = std::norm(alpha);
  int max_index = truncation_length(a2, n);
  for (;;) {
    if (max_index > capacity_limit(0))
      throw CapacityError("dfs_coefficients: basis demand " + std::to_string(max_index) +
                          " exceeds factorial capacity");
    std::vector<Complex> c = dfs_raw(alpha, n, max_index);
    long double norm2 = 0.0L;
    for (const Complex& v : c) norm2 += std::norm(v);
    const double edge = std::norm(c.back()) / static_cast<double>(norm2);
    if (edge < eps) {
      fock::FockAmplitudes out{0, std::move(c), eps};
      out.normalize();
      return out;
    }
    max_index += max_index / 2 + 8;
  }
}

fock::FockAmplitudes pasdfs_amplitudes(const StateSpec& spec, double eps) {
  validate(spec);
  validate_eps(eps);
  const int k = spec.added;
  const int q = spec.subtracted;
  const int n = spec.fock;
  const Complex alpha = spec.displacement;

  if (alpha == Complex{0.0, 0.0}) {
    // a^q a^dag^k |n> is proportional to a single Fock state, exactly.
    const int w = n + k - q;
    if (w < 0)
      throw AnnihilationError("pasdfs_amplitudes: subtraction exceeds photon content");
    return fock::FockAmplitudes{w, {Complex{1.0, 0.0}}, 0.0};
  }

  using numerics::log_factorial;
  const double a2 = std::norm(alpha);
  const int offset = std::max(0, k - q);
  int max_index = truncation_length(a2, n + k + q);
  for (;;) {
    if (max_index > capacity_limit(k))
      throw CapacityError("pasdfs_amplitudes: basis demand " + std::to_string(max_index) +
                          " exceeds factorial capacity");
    const std::vector<Complex> c = dfs_raw(alpha, n, max_index);
    // Ladder reweighting: |m> picks up (m+k)! / sqrt(m! (m+k-q)!) and lands
    // on photon number m+k-q; components pushed below the vacuum vanish.
    const int m_lo = std::max(0, q - k);
    std::vector<Complex> out(static_cast<std::size_t>(max_index + k - q - offset) + 1,
                             Complex{0.0, 0.0});
    for (int m = m_lo; m <= max_index; ++m) {
      const double log_g = log_factorial(m + k) - 0.5 * log_factorial(m) -
                           0.5 * log_factorial(m + k - q);
      out[static_cast<std::size_t>(m + k - q - offset)] =
          c[static_cast<std::size_t>(m)] * std::exp(log_g);
    }
    long double norm2 = 0.0L;
    for (const Complex& v : out) norm2 += std::norm(v);
    if (static_cast<double>(norm2) < kAnnihilationThreshold)
      throw AnnihilationError("pasdfs_amplitudes: engineered state has negligible norm");
    const double edge = std::norm(out.back()) / static_cast<double>(norm2);
    if (edge < eps) {
      fock::FockAmplitudes result{offset, std::move(out), eps};
      result.normalize();
      return result;
    }
    max_index += max_index / 2 + 8;
  }
}

}  // namespace pasdfs::engineering
