// SPDX-License-Identifier: Apache-2.0

// AVX2+FMA kernel variants.  Each 256-bit register carries two complex
// doubles as [re0, im0, re1, im1]; four grid points are processed per
// iteration and the remainder falls back to the scalar reference.

#if defined(PASDFS_HAVE_AVX2)

#include <immintrin.h>

#include "kernels_impl.hpp"

namespace pasdfs::kernels::detail {

namespace {

// Complex product per 128-bit lane: (ar+i ai)(br+i bi).
inline __m256d cmul(__m256d a, __m256d b) {
  const __m256d b_re = _mm256_movedup_pd(b);
  const __m256d b_im = _mm256_permute_pd(b, 0xF);
  const __m256d a_sw = _mm256_permute_pd(a, 0x5);
  const __m256d cross = _mm256_mul_pd(a_sw, b_im);
  return _mm256_fmaddsub_pd(a, b_re, cross);
}

inline __m256d broadcast_complex(const Complex& c) {
  return _mm256_broadcast_pd(reinterpret_cast<const __m128d*>(&c));
}

// Packs |s|^2 of two register pairs into [n0, n1, n2, n3] order.
inline __m256d squared_norms(__m256d s01, __m256d s23) {
  const __m256d sq01 = _mm256_mul_pd(s01, s01);
  const __m256d sq23 = _mm256_mul_pd(s23, s23);
  const __m256d h = _mm256_hadd_pd(sq01, sq23);  // [n0, n2, n1, n3]
  return _mm256_permute4x64_pd(h, _MM_SHUFFLE(3, 1, 2, 0));
}

const double* as_doubles(const Complex* p) {
  return reinterpret_cast<const double*>(p);
}

}  // namespace

void abs2_power_series_row_avx2(std::span<const Complex> coeffs,
                                std::span<const Complex> z, std::span<double> out,
                                double scale) {
  const int count = static_cast<int>(coeffs.size());
  const std::size_t vec_end = z.size() - z.size() % 4;
  const __m256d vscale = _mm256_set1_pd(scale);
  for (std::size_t i = 0; i < vec_end; i += 4) {
    const __m256d z01 = _mm256_loadu_pd(as_doubles(z.data() + i));
    const __m256d z23 = _mm256_loadu_pd(as_doubles(z.data() + i + 2));
    __m256d s01 = broadcast_complex(coeffs[static_cast<std::size_t>(count - 1)]);
    __m256d s23 = s01;
    for (int u = count - 2; u >= 0; --u) {
      const __m256d c = broadcast_complex(coeffs[static_cast<std::size_t>(u)]);
      s01 = _mm256_add_pd(cmul(s01, z01), c);
      s23 = _mm256_add_pd(cmul(s23, z23), c);
    }
    _mm256_storeu_pd(out.data() + i, _mm256_mul_pd(vscale, squared_norms(s01, s23)));
  }
  if (vec_end < z.size())
    abs2_power_series_row_scalar(coeffs, z.subspan(vec_end), out.subspan(vec_end),
                                 scale);
}

void abs2_weighted_series_row_avx2(std::span<const Complex> coeffs,
                                   std::span<const Complex> factor,
                                   std::span<const Complex> seed,
                                   std::span<const double> step,
                                   std::span<double> out, double scale) {
  const int count = static_cast<int>(coeffs.size());
  const std::size_t vec_end = seed.size() - seed.size() % 4;
  const __m256d vscale = _mm256_set1_pd(scale);
  for (std::size_t i = 0; i < vec_end; i += 4) {
    const __m256d f01 = _mm256_loadu_pd(as_doubles(factor.data() + i));
    const __m256d f23 = _mm256_loadu_pd(as_doubles(factor.data() + i + 2));
    __m256d t01 = _mm256_loadu_pd(as_doubles(seed.data() + i));
    __m256d t23 = _mm256_loadu_pd(as_doubles(seed.data() + i + 2));
    __m256d s01 = _mm256_setzero_pd();
    __m256d s23 = _mm256_setzero_pd();
    for (int u = 0; u < count; ++u) {
      const __m256d c = broadcast_complex(coeffs[static_cast<std::size_t>(u)]);
      s01 = _mm256_add_pd(s01, cmul(c, t01));
      s23 = _mm256_add_pd(s23, cmul(c, t23));
      if (u + 1 < count) {
        const __m256d w = _mm256_set1_pd(step[static_cast<std::size_t>(u)]);
        t01 = _mm256_mul_pd(cmul(t01, f01), w);
        t23 = _mm256_mul_pd(cmul(t23, f23), w);
      }
    }
    _mm256_storeu_pd(out.data() + i, _mm256_mul_pd(vscale, squared_norms(s01, s23)));
  }
  if (vec_end < seed.size())
    abs2_weighted_series_row_scalar(coeffs, factor.subspan(vec_end),
                                    seed.subspan(vec_end), step, out.subspan(vec_end),
                                    scale);
}

}  // namespace pasdfs::kernels::detail

#endif  // PASDFS_HAVE_AVX2
