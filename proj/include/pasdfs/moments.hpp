// SPDX-License-Identifier: Apache-2.0
#pragma once

// Normally ordered moments <a^dag^t a^j> evaluated directly from stored Fock
// amplitudes.  A per-state evaluator caches results and can be switched to
// the dense-operator oracle so every consumer can be cross-checked against
// brute force.

#include <map>
#include <mutex>
#include <utility>

#include "pasdfs/fock.hpp"
#include "pasdfs/types.hpp"

namespace pasdfs::moments {

// Largest ladder power served per side.
inline constexpr int kMaxMomentOrder = 10;

struct MomentKey {
  int creation = 0;      // power of a^dag
  int annihilation = 0;  // power of a

  friend bool operator<(const MomentKey& a, const MomentKey& b) {
    return std::pair{a.creation, a.annihilation} < std::pair{b.creation, b.annihilation};
  }
};

// <a^dag^t a^j> as a single weighted sum over the amplitude window: the term
// at photon number w couples conj(c_{w+t-j}) c_w with the factorial weight
// sqrt(w! (w-j+t)!) / (w-j)!; terms that would drop below the vacuum vanish.
Complex moment(const fock::FockAmplitudes& psi, MomentKey key);

// Cached per-state moment source.  `analytic` evaluates the weighted-sum
// form above; `dense_oracle` routes through repeated ladder-matrix action.
class StateMoments {
 public:
  enum class Source { analytic, dense_oracle };

  explicit StateMoments(fock::FockAmplitudes psi, Source source = Source::analytic);

  // Cached <a^dag^creation a^annihilation>; thread-safe.
  Complex moment(int creation, int annihilation) const;

  // <N> = Re <a^dag a>.
  double mean_photon() const;

  // (<N>, <(dN)^2>) with <N^2> assembled as <a^dag^2 a^2> + <a^dag a>.
  std::pair<double, double> number_mean_and_variance() const;

  const fock::FockAmplitudes& state() const noexcept { return psi_; }
  Source source() const noexcept { return source_; }

 private:
  fock::FockAmplitudes psi_;
  Source source_;
  mutable std::mutex mutex_;
  mutable std::map<MomentKey, Complex> cache_;
};

}  // namespace pasdfs::moments
