// SPDX-License-Identifier: Apache-2.0
#include "pasdfs/phase.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "pasdfs/kernels.hpp"

namespace pasdfs::phase {

namespace {

constexpr double kDenominatorFloor = 1e-12;

}  // namespace

double PhaseDistribution::integral() const {
  long double acc = 0.0L;
  for (const double v : values) acc += v;
  return static_cast<double>(acc * step);
}

PhaseDistribution phase_distribution(const fock::FockAmplitudes& psi, int grid_points) {
  if (grid_points < kMinGridPoints)
    throw std::invalid_argument("phase_distribution: grid must have at least 256 points");
  PhaseDistribution dist;
  dist.step = kTwoPi / grid_points;
  dist.thetas.resize(static_cast<std::size_t>(grid_points));
  dist.values.resize(static_cast<std::size_t>(grid_points));
  std::vector<Complex> z(static_cast<std::size_t>(grid_points));
  for (int i = 0; i < grid_points; ++i) {
    const double theta = dist.step * i;
    dist.thetas[static_cast<std::size_t>(i)] = theta;
    z[static_cast<std::size_t>(i)] = std::polar(1.0, -theta);
  }
  kernels::abs2_power_series_row(psi.amps, z, dist.values, 1.0 / kTwoPi);
  return dist;
}

SineCosineMoments sine_cosine_moments(const moments::StateMoments& m) {
  const double nbar = m.mean_photon();
  const double s_sq = nbar + 0.5;
  const double s = std::sqrt(s_sq);
  const Complex a = m.moment(0, 1);
  const Complex a2 = m.moment(0, 2);
  SineCosineMoments out;
  out.mean_sine = a.imag() / s;
  out.mean_cosine = a.real() / s;
  out.mean_sine_sq = (2.0 * nbar + 1.0 - 2.0 * a2.real()) / (4.0 * s_sq);
  out.mean_cosine_sq = (2.0 * nbar + 1.0 + 2.0 * a2.real()) / (4.0 * s_sq);
  return out;
}

FluctuationReport phase_fluctuation(const moments::StateMoments& m) {
  const SineCosineMoments sc = sine_cosine_moments(m);
  const auto [mean_n, var_n] = m.number_mean_and_variance();
  (void)mean_n;
  FluctuationReport r;
  r.mean_sine = sc.mean_sine;
  r.mean_cosine = sc.mean_cosine;
  r.var_sine = sc.mean_sine_sq - sc.mean_sine * sc.mean_sine;
  r.var_cosine = sc.mean_cosine_sq - sc.mean_cosine * sc.mean_cosine;
  r.var_number = var_n;
  r.s_param = r.var_number * r.var_sine;

  const double nan = std::numeric_limits<double>::quiet_NaN();
  const double direction = sc.mean_sine * sc.mean_sine + sc.mean_cosine * sc.mean_cosine;
  if (direction < kDenominatorFloor) {
    r.denominator_small = true;
    r.u = nan;
  } else {
    r.u = r.var_number * (r.var_sine + r.var_cosine) / direction;
  }
  const double cos_sq = sc.mean_cosine * sc.mean_cosine;
  if (cos_sq < kDenominatorFloor) {
    r.cosine_denominator_small = true;
    r.q_param = nan;
  } else {
    r.q_param = r.s_param / cos_sq;
  }
  return r;
}

}  // namespace pasdfs::phase
