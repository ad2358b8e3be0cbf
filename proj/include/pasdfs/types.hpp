// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>

namespace pasdfs {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

}  // namespace pasdfs
