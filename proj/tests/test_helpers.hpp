// SPDX-License-Identifier: Apache-2.0
#pragma once

// Shared oracles and comparison helpers for the unit tests.  Reference
// constructions here are deliberately independent of the library paths they
// check: plain series in extended precision, no shared formula code.

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "pasdfs/fock.hpp"
#include "pasdfs/types.hpp"

namespace test_helpers {

using pasdfs::Complex;

// Coherent state |alpha> by the plain series e^{-|a|^2/2} alpha^w / sqrt(w!)
// accumulated in extended precision.
inline pasdfs::fock::FockAmplitudes reference_coherent(Complex alpha, int max_index) {
  std::vector<Complex> amps(static_cast<std::size_t>(max_index) + 1);
  const long double a2 = std::norm(std::complex<long double>{alpha.real(), alpha.imag()});
  std::complex<long double> term = std::exp(-0.5L * a2);
  const std::complex<long double> a{alpha.real(), alpha.imag()};
  for (int w = 0; w <= max_index; ++w) {
    amps[static_cast<std::size_t>(w)] =
        Complex{static_cast<double>(term.real()), static_cast<double>(term.imag())};
    term *= a / std::sqrt(static_cast<long double>(w) + 1.0L);
  }
  return pasdfs::fock::FockAmplitudes{0, std::move(amps), 0.0};
}

// Largest componentwise amplitude difference over the union of supports.
inline double max_amp_diff(const pasdfs::fock::FockAmplitudes& a,
                           const pasdfs::fock::FockAmplitudes& b) {
  const int lo = std::min(a.offset, b.offset);
  const int hi = std::max(a.max_photon(), b.max_photon());
  double worst = 0.0;
  for (int w = lo; w <= hi; ++w)
    worst = std::max(worst, std::abs(a.at_photon(w) - b.at_photon(w)));
  return worst;
}

// As max_amp_diff after removing the global phase: normalization discards a
// physically irrelevant unit factor (alpha/|alpha| per subtracted photon),
// so reduction identities hold only up to it.  b is rotated onto a by the
// phase of their overlap before comparing.
inline double max_amp_diff_aligned(const pasdfs::fock::FockAmplitudes& a,
                                   const pasdfs::fock::FockAmplitudes& b) {
  const int lo = std::min(a.offset, b.offset);
  const int hi = std::max(a.max_photon(), b.max_photon());
  Complex overlap{0.0, 0.0};
  for (int w = lo; w <= hi; ++w) overlap += std::conj(b.at_photon(w)) * a.at_photon(w);
  const double mag = std::abs(overlap);
  const Complex phase = mag > 0.0 ? overlap / mag : Complex{1.0, 0.0};
  double worst = 0.0;
  for (int w = lo; w <= hi; ++w)
    worst = std::max(worst, std::abs(a.at_photon(w) - phase * b.at_photon(w)));
  return worst;
}

inline std::mt19937& rng() {
  static std::mt19937 gen(0x5eed1234u);
  return gen;
}

inline double uniform(double lo, double hi) {
  std::uniform_real_distribution<double> dist(lo, hi);
  return dist(rng());
}

}  // namespace test_helpers
