// SPDX-License-Identifier: Apache-2.0
#pragma once

// Moments-based nonclassicality witnesses.  Every witness reports a signed
// value whose strict negativity (with agarwal_tara and vogel read the same
// way) certifies a nonclassical photon statistics or quadrature feature; a
// classical coherent state sits at or above zero for all of them.

#include <optional>
#include <string_view>

#include "pasdfs/moments.hpp"

namespace pasdfs::witnesses {

enum class Criterion {
  antibunching,
  hosps,
  hong_mandel,
  klyshko,
  agarwal_tara,
  vogel,
};

// Canonical lowercase name used by the CLI and reports.
std::string_view name(Criterion c);
// Inverse of name(); empty when the string names no criterion.
std::optional<Criterion> parse_criterion(std::string_view text);

// Sign threshold below which a value counts as a nonclassicality verdict.
inline constexpr double kSignTolerance = 1e-10;

struct WitnessReport {
  Criterion criterion{};
  // Moment order or photon-number argument the value was evaluated at, in
  // the caller's convention (see each witness).
  int argument = 0;
  double value = 0.0;
  // True when value < -kSignTolerance and the witness is healthy.
  bool nonclassical = false;
  // A ratio's denominator was too degenerate to quote a value.
  bool denominator_small = false;
  // Input state carried a degraded truncation bound.
  bool truncation_warning = false;
};

// Largest moment order accepted by the order-indexed witnesses.
inline constexpr int kMaxWitnessOrder = 10;

// Higher-order antibunching at degree l in [2, 10]:
//   <a^dag^l a^l> - <a^dag a>^l,
// reported with argument = l - 1 (the conventional antibunching order).
WitnessReport antibunching(const moments::StateMoments& m, int l);

// Higher-order sub-Poissonian statistics at degree l in [2, 10]: the l-th
// central photon-number moment minus its Poissonian value, both expanded
// over factorial moments with Stirling weights; argument = l - 1.
WitnessReport hosps(const moments::StateMoments& m, int l);

// <(dX)^l>, the l-th central moment of X = (a + a^dag)/sqrt(2), evaluated by
// applying (X - <X>) to the state l/2 times and closing the inner product;
// even l in [2, 10], exact for the stored amplitudes.
double quadrature_central_moment(const moments::StateMoments& m, int l);

// The same central moment assembled from normally ordered moments through
// the binomial / double-factorial expansion; used to certify the direct
// evaluation and to drive the oracle cross-check.
double quadrature_central_moment_expansion(const moments::StateMoments& m, int l);

// Hong-Mandel higher-order squeezing at even degree l in [2, 10]:
//   (<(dX)^l> - (1/2)_{l/2}) / (1/2)_{l/2},  argument = l.
WitnessReport hong_mandel(const moments::StateMoments& m, int l);

// Klyshko photon-number criterion at photon number z >= 0:
//   (z+2) p_z p_{z+2} - (z+1) p_{z+1}^2,  argument = z.
WitnessReport klyshko(const moments::StateMoments& m, int z);

// Agarwal-Tara A3: det m3 / (det mu3 - det m3) with m3 built from factorial
// moments and mu3 from raw photon-number moments.  Degenerate denominators
// set denominator_small and suppress the verdict.
WitnessReport agarwal_tara(const moments::StateMoments& m);

// Determinant witness on the matrix [[1, <a>, <a^dag>], [<a^dag>, <N>,
// <a^dag^2>], [<a>, <a^2>, <N>]]; negativity certifies nonclassicality.
WitnessReport vogel(const moments::StateMoments& m);

}  // namespace pasdfs::witnesses
