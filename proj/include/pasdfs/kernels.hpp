// SPDX-License-Identifier: Apache-2.0
#pragma once

// Data-parallel inner loops behind the phase-distribution and Husimi grids.
// A scalar reference implementation always exists; an AVX2+FMA variant is
// compiled when the toolchain supports it and selected at runtime when the
// CPU does.  Variants follow the same per-point summation order, so results
// differ only by fused-multiply-add rounding.

#include <span>
#include <string_view>
#include <vector>

#include "pasdfs/types.hpp"

namespace pasdfs::kernels {

enum class Backend { scalar, avx2 };

std::string_view name(Backend b);

// Backends usable on this machine, scalar first.
std::vector<Backend> available_backends();

// Backend the dispatched kernels currently run on.
Backend active_backend();

// Pins the dispatched kernels to one backend (used by equivalence tests);
// throws std::invalid_argument when it is not available on this machine.
void force_backend(Backend b);

// Restores automatic selection (best available backend).
void use_auto_backend();

// out[i] = scale * | sum_u coeffs[u] * z[i]^u |^2 with z[i] on the unit
// circle, evaluated by Horner's rule from the highest coefficient down.
void abs2_power_series_row(std::span<const Complex> coeffs,
                           std::span<const Complex> z, std::span<double> out,
                           double scale);

// out[i] = scale * | sum_u coeffs[u] * t_i(u) |^2 where t_i(0) = seed[i] and
// t_i(u+1) = t_i(u) * factor[i] * step[u]; step must hold at least
// coeffs.size() - 1 entries.
void abs2_weighted_series_row(std::span<const Complex> coeffs,
                              std::span<const Complex> factor,
                              std::span<const Complex> seed,
                              std::span<const double> step, std::span<double> out,
                              double scale);

}  // namespace pasdfs::kernels
