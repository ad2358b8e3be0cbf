// SPDX-License-Identifier: Apache-2.0
#pragma once

// Internal kernel entry points shared between the dispatcher and the
// vectorized translation units.

#include <span>

#include "pasdfs/types.hpp"

namespace pasdfs::kernels::detail {

void abs2_power_series_row_scalar(std::span<const Complex> coeffs,
                                  std::span<const Complex> z, std::span<double> out,
                                  double scale);

void abs2_weighted_series_row_scalar(std::span<const Complex> coeffs,
                                     std::span<const Complex> factor,
                                     std::span<const Complex> seed,
                                     std::span<const double> step,
                                     std::span<double> out, double scale);

#if defined(PASDFS_HAVE_AVX2)
void abs2_power_series_row_avx2(std::span<const Complex> coeffs,
                                std::span<const Complex> z, std::span<double> out,
                                double scale);

void abs2_weighted_series_row_avx2(std::span<const Complex> coeffs,
                                   std::span<const Complex> factor,
                                   std::span<const Complex> seed,
                                   std::span<const double> step,
                                   std::span<double> out, double scale);
#endif

}  // namespace pasdfs::kernels::detail
