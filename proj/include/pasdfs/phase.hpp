// SPDX-License-Identifier: Apache-2.0
#pragma once

// Canonical phase distribution over [0, 2pi) and the sine/cosine phase
// fluctuation parameters built on operators S = (a - a^dag)/(2i s) and
// C = (a + a^dag)/(2 s) with the scalar normalization s = sqrt(<N> + 1/2).

#include <vector>

#include "pasdfs/moments.hpp"
#include "pasdfs/types.hpp"

namespace pasdfs::phase {

// Smallest accepted phase grid.
inline constexpr int kMinGridPoints = 256;
// Default phase grid, well past twice the largest coefficient bandwidth, so
// the periodic trapezoid rule integrates the distribution exactly.
inline constexpr int kDefaultGridPoints = 1024;

struct PhaseDistribution {
  std::vector<double> thetas;  // uniform nodes theta_i = 2pi i / P
  std::vector<double> values;
  double step = 0.0;

  // Periodic trapezoid integral over [0, 2pi): step * sum(values).
  double integral() const;
};

// P(theta) = |sum_w c_w e^{-i w theta}|^2 / 2pi on a uniform grid.  The
// leading e^{-i offset theta} has unit modulus and drops inside the absolute
// value, so only relative photon numbers enter the kernel.
PhaseDistribution phase_distribution(const fock::FockAmplitudes& psi,
                                     int grid_points = kDefaultGridPoints);

struct SineCosineMoments {
  double mean_sine = 0.0;
  double mean_sine_sq = 0.0;
  double mean_cosine = 0.0;
  double mean_cosine_sq = 0.0;
};

// First and second moments of S and C from <a>, <a^2>, and <N>.
SineCosineMoments sine_cosine_moments(const moments::StateMoments& m);

struct FluctuationReport {
  // Carruthers-Nieto U: <(dN)^2> (var S + var C) / (<S>^2 + <C>^2).
  double u = 0.0;
  // S parameter: <(dN)^2> var S.
  double s_param = 0.0;
  // Q parameter: s_param / <C>^2.
  double q_param = 0.0;
  double mean_sine = 0.0;
  double mean_cosine = 0.0;
  double var_sine = 0.0;
  double var_cosine = 0.0;
  double var_number = 0.0;
  // <S>^2 + <C>^2 degenerate: u is NaN and carries no verdict.
  bool denominator_small = false;
  // <C>^2 degenerate: q_param is NaN and carries no verdict.
  bool cosine_denominator_small = false;
};

// Full fluctuation report; degenerate denominators yield NaN entries with
// the matching flag instead of an error.
FluctuationReport phase_fluctuation(const moments::StateMoments& m);

}  // namespace pasdfs::phase
