// SPDX-License-Identifier: Apache-2.0
#include "pasdfs/moments.hpp"

#include <cmath>
#include <stdexcept>

#include "pasdfs/numerics.hpp"

namespace pasdfs::moments {

namespace {

void validate_key(MomentKey key) {
  if (key.creation < 0 || key.annihilation < 0 || key.creation > kMaxMomentOrder ||
      key.annihilation > kMaxMomentOrder)
    throw std::invalid_argument("moment: ladder powers must lie in [0, 10]");
}

// Falling factorial w (w-1) ... (w-f+1) in extended precision; this is the
// diagonal factorial weight w! / (w-f)!.
long double falling_factorial(int w, int f) {
  long double acc = 1.0L;
  for (int i = 0; i < f; ++i) acc *= static_cast<long double>(w - i);
  return acc;
}

}  // namespace

Complex moment(const fock::FockAmplitudes& psi, MomentKey key) {
  validate_key(key);
  const int t = key.creation;
  const int j = key.annihilation;

  if (t == j) {
    // Diagonal moments depend only on the photon distribution; the factorial
    // weight is an exact product, keeping coherent-state cancellations clean.
    long double acc = 0.0L;
    for (int i = 0; i < psi.size(); ++i) {
      const int w = psi.offset + i;
      if (w < j) continue;
      const Complex c = psi.amps[static_cast<std::size_t>(i)];
      const long double p = static_cast<long double>(c.real()) * c.real() +
                            static_cast<long double>(c.imag()) * c.imag();
      acc += falling_factorial(w, j) * p;
    }
    return Complex{static_cast<double>(acc), 0.0};
  }

  using numerics::log_factorial;
  std::complex<long double> acc{0.0L, 0.0L};
  for (int i = 0; i < psi.size(); ++i) {
    const int w = psi.offset + i;
    if (w < j) continue;
    const int shifted = w - j + t;
    const int i2 = shifted - psi.offset;
    if (i2 < 0 || i2 >= psi.size()) continue;
    const double log_w = 0.5 * log_factorial(w) + 0.5 * log_factorial(shifted) -
                         log_factorial(w - j);
    const Complex term = std::conj(psi.amps[static_cast<std::size_t>(i2)]) *
                         psi.amps[static_cast<std::size_t>(i)];
    const long double weight = std::exp(static_cast<long double>(log_w));
    acc += std::complex<long double>{term.real(), term.imag()} * weight;
  }
  return Complex{static_cast<double>(acc.real()), static_cast<double>(acc.imag())};
}

StateMoments::StateMoments(fock::FockAmplitudes psi, Source source)
    : psi_(std::move(psi)), source_(source) {}

Complex StateMoments::moment(int creation, int annihilation) const {
  const MomentKey key{creation, annihilation};
  validate_key(key);
  {
    std::lock_guard<std::mutex> lock(mutex_);
    const auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
  }
  const Complex value = source_ == Source::analytic
                            ? moments::moment(psi_, key)
                            : fock::expectation_oracle(psi_, creation, annihilation);
  std::lock_guard<std::mutex> lock(mutex_);
  cache_.emplace(key, value);
  return value;
}

double StateMoments::mean_photon() const { return moment(1, 1).real(); }

std::pair<double, double> StateMoments::number_mean_and_variance() const {
  const double mean = mean_photon();
  const double second = moment(2, 2).real() + mean;
  return {mean, second - mean * mean};
}

}  // namespace pasdfs::moments
