// SPDX-License-Identifier: Apache-2.0
#include "pasdfs/kernels.hpp"

#include <atomic>
#include <stdexcept>

#include "kernels_impl.hpp"

namespace pasdfs::kernels {

namespace detail {

void abs2_power_series_row_scalar(std::span<const Complex> coeffs,
                                  std::span<const Complex> z, std::span<double> out,
                                  double scale) {
  const int count = static_cast<int>(coeffs.size());
  for (std::size_t i = 0; i < z.size(); ++i) {
    Complex s = coeffs[static_cast<std::size_t>(count - 1)];
    for (int u = count - 2; u >= 0; --u)
      s = s * z[i] + coeffs[static_cast<std::size_t>(u)];
    out[i] = scale * std::norm(s);
  }
}

void abs2_weighted_series_row_scalar(std::span<const Complex> coeffs,
                                     std::span<const Complex> factor,
                                     std::span<const Complex> seed,
                                     std::span<const double> step,
                                     std::span<double> out, double scale) {
  const int count = static_cast<int>(coeffs.size());
  for (std::size_t i = 0; i < seed.size(); ++i) {
    Complex t = seed[i];
    Complex s{0.0, 0.0};
    for (int u = 0; u < count; ++u) {
      s += coeffs[static_cast<std::size_t>(u)] * t;
      if (u + 1 < count) t *= factor[i] * step[static_cast<std::size_t>(u)];
    }
    out[i] = scale * std::norm(s);
  }
}

}  // namespace detail

namespace {

struct KernelTable {
  void (*power_series)(std::span<const Complex>, std::span<const Complex>,
                       std::span<double>, double);
  void (*weighted_series)(std::span<const Complex>, std::span<const Complex>,
                          std::span<const Complex>, std::span<const double>,
                          std::span<double>, double);
  Backend backend;
};

constexpr KernelTable kScalarTable{detail::abs2_power_series_row_scalar,
                                   detail::abs2_weighted_series_row_scalar,
                                   Backend::scalar};

#if defined(PASDFS_HAVE_AVX2)
constexpr KernelTable kAvx2Table{detail::abs2_power_series_row_avx2,
                                 detail::abs2_weighted_series_row_avx2,
                                 Backend::avx2};

bool cpu_supports_avx2() {
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
}
#endif

const KernelTable* best_table() {
#if defined(PASDFS_HAVE_AVX2)
  if (cpu_supports_avx2()) return &kAvx2Table;
#endif
  return &kScalarTable;
}

std::atomic<const KernelTable*>& active_table() {
  static std::atomic<const KernelTable*> table{best_table()};
  return table;
}

}  // namespace

std::string_view name(Backend b) {
  switch (b) {
    case Backend::scalar: return "scalar";
    case Backend::avx2: return "avx2";
  }
  return "unknown";
}

std::vector<Backend> available_backends() {
  std::vector<Backend> list{Backend::scalar};
#if defined(PASDFS_HAVE_AVX2)
  if (cpu_supports_avx2()) list.push_back(Backend::avx2);
#endif
  return list;
}

Backend active_backend() { return active_table().load()->backend; }

void force_backend(Backend b) {
  if (b == Backend::scalar) {
    active_table().store(&kScalarTable);
    return;
  }
#if defined(PASDFS_HAVE_AVX2)
  if (b == Backend::avx2 && cpu_supports_avx2()) {
    active_table().store(&kAvx2Table);
    return;
  }
#endif
  throw std::invalid_argument("force_backend: backend not available on this machine");
}

void use_auto_backend() { active_table().store(best_table()); }

void abs2_power_series_row(std::span<const Complex> coeffs, std::span<const Complex> z,
                           std::span<double> out, double scale) {
  if (coeffs.empty()) throw std::invalid_argument("abs2_power_series_row: no coefficients");
  if (z.size() != out.size())
    throw std::invalid_argument("abs2_power_series_row: size mismatch");
  active_table().load()->power_series(coeffs, z, out, scale);
}

void abs2_weighted_series_row(std::span<const Complex> coeffs,
                              std::span<const Complex> factor,
                              std::span<const Complex> seed,
                              std::span<const double> step, std::span<double> out,
                              double scale) {
  if (coeffs.empty())
    throw std::invalid_argument("abs2_weighted_series_row: no coefficients");
  if (factor.size() != seed.size() || seed.size() != out.size())
    throw std::invalid_argument("abs2_weighted_series_row: size mismatch");
  if (step.size() + 1 < coeffs.size())
    throw std::invalid_argument("abs2_weighted_series_row: step table too short");
  active_table().load()->weighted_series(coeffs, factor, seed, step, out, scale);
}

}  // namespace pasdfs::kernels
