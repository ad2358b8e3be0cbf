// SPDX-License-Identifier: Apache-2.0
#include "pasdfs/husimi.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "pasdfs/kernels.hpp"
#include "pasdfs/moments.hpp"
#include "pasdfs/numerics.hpp"

namespace pasdfs::husimi {

namespace {

// Coherent-overlap term tau_w = e^{-|b|^2/2} conj(b)^w / sqrt(w!) at the
// lowest stored photon number; |tau_w| <= 1 for every w and beta, so the
// recursion in the kernel never overflows.  The log-space assembly keeps the
// seed normal down to the largest windows served.
Complex seed_term(Complex beta, int offset) {
  const double b2 = std::norm(beta);
  if (offset == 0) return Complex{std::exp(-0.5 * b2), 0.0};
  const double abs_b = std::sqrt(b2);
  if (abs_b == 0.0) return Complex{0.0, 0.0};
  const double log_mag = -0.5 * b2 + offset * std::log(abs_b) -
                         0.5 * numerics::log_factorial(offset);
  return std::exp(log_mag) * std::polar(1.0, -offset * std::arg(beta));
}

std::vector<double> step_table(int offset, int count) {
  std::vector<double> step(static_cast<std::size_t>(std::max(0, count - 1)));
  for (std::size_t u = 0; u < step.size(); ++u)
    step[u] = 1.0 / std::sqrt(static_cast<double>(offset) + static_cast<double>(u) + 1.0);
  return step;
}

std::vector<double> linspace(double lo, double hi, int n) {
  std::vector<double> xs(static_cast<std::size_t>(n));
  const double h = (hi - lo) / static_cast<double>(n - 1);
  for (int i = 0; i < n; ++i) xs[static_cast<std::size_t>(i)] = lo + h * i;
  xs.back() = hi;
  return xs;
}

QGrid evaluate_grid(const fock::FockAmplitudes& psi, const Window& w, int nx, int ny) {
  if (nx < kMinGridSide || ny < kMinGridSide)
    throw std::invalid_argument("q_grid: grid must be at least 64 x 64");
  if (!(w.re_max > w.re_min) || !(w.im_max > w.im_min))
    throw std::invalid_argument("q_grid: window bounds must be increasing");
  QGrid grid;
  grid.window = w;
  grid.nx = nx;
  grid.ny = ny;
  grid.xs = linspace(w.re_min, w.re_max, nx);
  grid.ys = linspace(w.im_min, w.im_max, ny);
  grid.values.resize(static_cast<std::size_t>(nx) * static_cast<std::size_t>(ny));

  const std::vector<double> step = step_table(psi.offset, psi.size());
  std::vector<Complex> factor(static_cast<std::size_t>(nx));
  std::vector<Complex> seed(static_cast<std::size_t>(nx));
  for (int iy = 0; iy < ny; ++iy) {
    const double y = grid.ys[static_cast<std::size_t>(iy)];
    for (int ix = 0; ix < nx; ++ix) {
      const Complex beta{grid.xs[static_cast<std::size_t>(ix)], y};
      factor[static_cast<std::size_t>(ix)] = std::conj(beta);
      seed[static_cast<std::size_t>(ix)] = seed_term(beta, psi.offset);
    }
    std::span<double> row{grid.values.data() + static_cast<std::size_t>(iy) * nx,
                          static_cast<std::size_t>(nx)};
    kernels::abs2_weighted_series_row(psi.amps, factor, seed, step, row, 1.0 / kPi);
  }

  const double hx = (w.re_max - w.re_min) / static_cast<double>(nx - 1);
  const double hy = (w.im_max - w.im_min) / static_cast<double>(ny - 1);
  long double mass = 0.0L;
  double peak = 0.0;
  for (int iy = 0; iy < ny; ++iy) {
    const double wy = (iy == 0 || iy == ny - 1) ? 0.5 : 1.0;
    for (int ix = 0; ix < nx; ++ix) {
      const double wx = (ix == 0 || ix == nx - 1) ? 0.5 : 1.0;
      const double v = grid.value_at(ix, iy);
      mass += static_cast<long double>(wx * wy) * v;
      if (v > peak) peak = v;
    }
  }
  grid.mass = static_cast<double>(mass) * hx * hy;
  grid.peak = peak;
  grid.mass_warning = grid.mass < kMassFloor;
  return grid;
}

}  // namespace

double q_function(const fock::FockAmplitudes& psi, Complex beta) {
  if (std::abs(beta) > kMaxBetaAbs)
    throw std::domain_error("q_function: |beta| exceeds the supported disc");
  const std::vector<double> step = step_table(psi.offset, psi.size());
  const Complex factor[1] = {std::conj(beta)};
  const Complex seed[1] = {seed_term(beta, psi.offset)};
  double out[1] = {0.0};
  kernels::abs2_weighted_series_row(psi.amps, std::span<const Complex>{factor, 1},
                                    std::span<const Complex>{seed, 1}, step,
                                    std::span<double>{out, 1}, 1.0 / kPi);
  return out[0];
}

QGrid q_grid(const fock::FockAmplitudes& psi, int nx, int ny) {
  const Complex center = moments::moment(psi, {0, 1});
  const double nbar = moments::moment(psi, {1, 1}).real();
  double half = 4.0 + std::sqrt(std::max(0.0, nbar));
  Window w{center.real() - half, center.real() + half, center.imag() - half,
           center.imag() + half};
  QGrid grid = evaluate_grid(psi, w, nx, ny);
  if (grid.mass < kMassFloor) {
    half *= 1.5;
    const Window wide{center.real() - half, center.real() + half,
                      center.imag() - half, center.imag() + half};
    grid = evaluate_grid(psi, wide, nx, ny);
    grid.widened = true;
  }
  return grid;
}

QGrid q_grid(const fock::FockAmplitudes& psi, const Window& window, int nx, int ny) {
  return evaluate_grid(psi, window, nx, ny);
}

int near_zero_count(const QGrid& grid, double rel_threshold) {
  const double cut = rel_threshold * grid.peak;
  return static_cast<int>(
      std::count_if(grid.values.begin(), grid.values.end(),
                    [cut](double v) { return v < cut; }));
}

}  // namespace pasdfs::husimi
