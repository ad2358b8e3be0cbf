// SPDX-License-Identifier: Apache-2.0

// Kernel-dispatch tests: the scalar reference path is always present, every
// available backend reproduces it bit-for-bit up to fused-multiply rounding,
// and the forced-backend switch used here is reversible.

#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <span>
#include <stdexcept>
#include <vector>

#include "pasdfs/engineering.hpp"
#include "pasdfs/husimi.hpp"
#include "pasdfs/kernels.hpp"
#include "pasdfs/phase.hpp"

#include "test_helpers.hpp"

namespace {

using pasdfs::Complex;
using pasdfs::kTwoPi;
using namespace pasdfs::kernels;

struct BackendGuard {
  ~BackendGuard() { use_auto_backend(); }
};

std::vector<Complex> random_coeffs(std::mt19937& rng, int count) {
  std::uniform_real_distribution<double> ur(-1.0, 1.0);
  std::vector<Complex> out(static_cast<std::size_t>(count));
  for (auto& c : out) c = Complex{ur(rng), ur(rng)};
  return out;
}

// Direct unvectorized evaluation of the power-series row contract.
void naive_power_row(std::span<const Complex> coeffs, std::span<const Complex> z,
                     std::span<double> out, double scale) {
  for (std::size_t i = 0; i < z.size(); ++i) {
    Complex sum{0.0, 0.0};
    Complex zp{1.0, 0.0};
    for (const Complex& c : coeffs) {
      sum += c * zp;
      zp *= z[i];
    }
    out[i] = scale * std::norm(sum);
  }
}

// Direct unvectorized evaluation of the weighted-series row contract.
void naive_weighted_row(std::span<const Complex> coeffs,
                        std::span<const Complex> factor,
                        std::span<const Complex> seed,
                        std::span<const double> step, std::span<double> out,
                        double scale) {
  for (std::size_t i = 0; i < out.size(); ++i) {
    Complex t = seed[i];
    Complex sum{0.0, 0.0};
    for (std::size_t u = 0; u < coeffs.size(); ++u) {
      sum += coeffs[u] * t;
      if (u + 1 < coeffs.size()) t *= factor[i] * step[u];
    }
    out[i] = scale * std::norm(sum);
  }
}

}  // namespace

TEST_CASE("the scalar backend is always available and selectable") {
  const auto avail = available_backends();
  REQUIRE_FALSE(avail.empty());
  CHECK(avail.front() == Backend::scalar);
  CHECK(std::find(avail.begin(), avail.end(), active_backend()) != avail.end());

  BackendGuard guard;
  force_backend(Backend::scalar);
  CHECK(active_backend() == Backend::scalar);
  use_auto_backend();
  CHECK(std::find(avail.begin(), avail.end(), active_backend()) != avail.end());
}

TEST_CASE("backend names are stable identifiers") {
  CHECK(name(Backend::scalar) == "scalar");
  CHECK(name(Backend::avx2) == "avx2");
}

TEST_CASE("forcing an unavailable backend is rejected") {
  const auto avail = available_backends();
  if (std::find(avail.begin(), avail.end(), Backend::avx2) == avail.end()) {
    CHECK_THROWS_AS(force_backend(Backend::avx2), std::invalid_argument);
  }
}

TEST_CASE("power-series row matches the direct evaluation on every backend") {
  std::mt19937 rng(0x7a3f11);
  BackendGuard guard;
  for (Backend b : available_backends()) {
    force_backend(b);
    for (int len : {1, 2, 3, 4, 5, 7, 9, 16, 17, 40}) {
      const auto coeffs = random_coeffs(rng, len);
      std::vector<Complex> z;
      for (int i = 0; i < 11; ++i)
        z.push_back(std::polar(1.0, kTwoPi * i / 11.0));
      std::vector<double> got(z.size()), want(z.size());
      abs2_power_series_row(coeffs, z, got, 0.25);
      naive_power_row(coeffs, z, want, 0.25);
      for (std::size_t i = 0; i < z.size(); ++i)
        CHECK(std::fabs(got[i] - want[i]) <=
              1e-13 * (1.0 + std::fabs(want[i])));
    }
  }
}

TEST_CASE("weighted-series row matches the direct evaluation on every backend") {
  std::mt19937 rng(0x15bd00);
  std::uniform_real_distribution<double> ur(0.2, 1.0);
  BackendGuard guard;
  for (Backend b : available_backends()) {
    force_backend(b);
    for (int len : {1, 2, 3, 5, 8, 13, 21}) {
      const auto coeffs = random_coeffs(rng, len);
      const int points = 9;
      std::vector<Complex> factor, seed;
      for (int i = 0; i < points; ++i) {
        factor.push_back(std::polar(ur(rng), kTwoPi * ur(rng)));
        seed.push_back(std::polar(ur(rng), kTwoPi * ur(rng)));
      }
      std::vector<double> step(static_cast<std::size_t>(std::max(0, len - 1)));
      for (auto& s : step) s = ur(rng);
      std::vector<double> got(points), want(points);
      abs2_weighted_series_row(coeffs, factor, seed, step, got, 1.0 / kTwoPi);
      naive_weighted_row(coeffs, factor, seed, step, want, 1.0 / kTwoPi);
      for (int i = 0; i < points; ++i)
        CHECK(std::fabs(got[i] - want[i]) <=
              1e-13 * (1.0 + std::fabs(want[i])));
    }
  }
}

TEST_CASE("phase and Husimi grids agree across backends") {
  const auto avail = available_backends();
  pasdfs::engineering::StateSpec s;
  s.added = 2;
  s.subtracted = 1;
  s.fock = 1;
  s.displacement = Complex{0.9, 0.4};
  const auto psi = pasdfs::engineering::pasdfs_amplitudes(s);

  BackendGuard guard;
  force_backend(Backend::scalar);
  const auto pd_ref = pasdfs::phase::phase_distribution(psi, 512);
  const auto qg_ref = pasdfs::husimi::q_grid(psi, 101, 101);

  for (Backend b : avail) {
    if (b == Backend::scalar) continue;
    force_backend(b);
    const auto pd = pasdfs::phase::phase_distribution(psi, 512);
    const auto qg = pasdfs::husimi::q_grid(psi, 101, 101);
    for (std::size_t i = 0; i < pd.values.size(); ++i)
      CHECK(std::fabs(pd.values[i] - pd_ref.values[i]) <=
            1e-12 * (1.0 + std::fabs(pd_ref.values[i])));
    for (std::size_t i = 0; i < qg.values.size(); ++i)
      CHECK(std::fabs(qg.values[i] - qg_ref.values[i]) <=
            1e-12 * (1.0 + std::fabs(qg_ref.values[i])));
  }
}

TEST_CASE("kernel size validation rejects mismatched spans") {
  std::vector<Complex> coeffs{{1.0, 0.0}, {0.5, 0.0}};
  std::vector<Complex> z{{1.0, 0.0}};
  std::vector<double> out(2);  // wrong: one output per node expected
  CHECK_THROWS_AS(abs2_power_series_row(coeffs, z, out, 1.0),
                  std::invalid_argument);

  std::vector<Complex> factor{{1.0, 0.0}};
  std::vector<Complex> seed{{1.0, 0.0}};
  std::vector<double> step;  // wrong: needs coeffs.size() - 1 entries
  std::vector<double> ok_out(1);
  CHECK_THROWS_AS(
      abs2_weighted_series_row(coeffs, factor, seed, step, ok_out, 1.0),
      std::invalid_argument);
}
