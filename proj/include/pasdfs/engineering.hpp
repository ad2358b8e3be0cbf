// SPDX-License-Identifier: Apache-2.0
#pragma once

// Closed-form construction of photon-added-then-subtracted displaced Fock
// states.  A displaced Fock state is expanded over the number basis through
// associated Laguerre polynomials; photon addition and subtraction then act
// as an exact factorial reweighting with an index shift.

#include "pasdfs/fock.hpp"
#include "pasdfs/types.hpp"

namespace pasdfs::engineering {

// Largest ladder-operation count accepted per kind.
inline constexpr int kMaxLadderOps = 12;
// Default bound on the relative weight of the last retained amplitude.
inline constexpr double kDefaultTruncationEps = 1e-12;
// Largest accepted truncation bound.
inline constexpr double kMaxTruncationEps = 1e-6;

// Target state: displace |fock> by `displacement`, add `added` photons, then
// subtract `subtracted`.
struct StateSpec {
  int added = 0;
  int subtracted = 0;
  int fock = 0;
  Complex displacement{0.0, 0.0};
};

// Throws std::invalid_argument when a ladder count or the seed photon number
// is outside [0, kMaxLadderOps].
void validate(const StateSpec& spec);

// Displaced Fock state D(alpha)|n> in the number basis, unit norm, truncated
// so the last retained amplitude carries relative weight below eps.  The
// displacement alpha == 0 returns the exact single-amplitude state.
fock::FockAmplitudes dfs_coefficients(Complex alpha, int n,
                                      double eps = kDefaultTruncationEps);

// Normalized a^subtracted a^dag^added D(alpha)|fock>.  Support starts at
// max(0, added - subtracted); an empty support throws AnnihilationError.
fock::FockAmplitudes pasdfs_amplitudes(const StateSpec& spec,
                                       double eps = kDefaultTruncationEps);

}  // namespace pasdfs::engineering
