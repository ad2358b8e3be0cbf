// SPDX-License-Identifier: Apache-2.0
#pragma once

// Husimi Q function Q(beta) = |<beta|psi>|^2 / pi evaluated through a
// stable recursion on coherent-overlap terms whose magnitudes never exceed
// one, plus rectangular grids with mass accounting for nonclassicality
// scans (zeros of Q flag nonclassical states).

#include <vector>

#include "pasdfs/fock.hpp"
#include "pasdfs/types.hpp"

namespace pasdfs::husimi {

// Largest |beta| served by the single-point evaluator.
inline constexpr double kMaxBetaAbs = 12.0;
// Smallest accepted grid resolution per axis.
inline constexpr int kMinGridSide = 64;
// Fraction of unit mass a usable window must capture.
inline constexpr double kMassFloor = 0.99;

// Q(beta); throws std::domain_error for |beta| > kMaxBetaAbs.
double q_function(const fock::FockAmplitudes& psi, Complex beta);

struct Window {
  double re_min = 0.0;
  double re_max = 0.0;
  double im_min = 0.0;
  double im_max = 0.0;
};

struct QGrid {
  Window window;
  int nx = 0;
  int ny = 0;
  std::vector<double> xs;      // node Re(beta), inclusive endpoints
  std::vector<double> ys;      // node Im(beta), inclusive endpoints
  std::vector<double> values;  // row-major, index iy * nx + ix
  // Trapezoid-rule integral of Q over the window; 1 for a window holding
  // the whole state.
  double mass = 0.0;
  double peak = 0.0;
  // The automatic window missed too much mass and was enlarged once.
  bool widened = false;
  // The final window still captures less than kMassFloor of the mass.
  bool mass_warning = false;

  double value_at(int ix, int iy) const {
    return values[static_cast<std::size_t>(iy) * static_cast<std::size_t>(nx) +
                  static_cast<std::size_t>(ix)];
  }
};

// Grid over an automatic window centered on <a> with half-width
// 4 + sqrt(<N>), widened once if it captures less than kMassFloor.
QGrid q_grid(const fock::FockAmplitudes& psi, int nx, int ny);

// Grid over a caller-chosen window; no widening, only mass_warning.
QGrid q_grid(const fock::FockAmplitudes& psi, const Window& window, int nx, int ny);

// Nodes whose value sits below rel_threshold * peak, the Q-zero signature.
int near_zero_count(const QGrid& grid, double rel_threshold = 1e-6);

}  // namespace pasdfs::husimi
