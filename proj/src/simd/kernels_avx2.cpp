// SPDX-License-Identifier: Apache-2.0
//
// Compiled with -mavx2 -mfma; only reached after a runtime CPU check.
#include <immintrin.h>

#include "edgegap/simd.hpp"

namespace edgegap::simd {
namespace {

double dot_avx2(const double* x, const double* y, std::size_t n) {
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i), acc0);
    acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i + 4), _mm256_loadu_pd(y + i + 4), acc1);
  }
  for (; i + 4 <= n; i += 4) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i), acc0);
  }
  acc0 = _mm256_add_pd(acc0, acc1);
  __m128d lo = _mm256_castpd256_pd128(acc0);
  __m128d hi = _mm256_extractf128_pd(acc0, 1);
  lo = _mm_add_pd(lo, hi);
  double sum = _mm_cvtsd_f64(_mm_add_sd(lo, _mm_unpackhi_pd(lo, lo)));
  for (; i < n; ++i) sum += x[i] * y[i];
  return sum;
}

void axpy_avx2(double alpha, const double* x, double* y, std::size_t n) {
  const __m256d a = _mm256_set1_pd(alpha);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    _mm256_storeu_pd(y + i, _mm256_fmadd_pd(a, _mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i)));
  }
  for (; i < n; ++i) y[i] += alpha * x[i];
}

void quotient_row_avx2(double fi, double gi, double xi, double scale, const double* f,
                       const double* g, const double* x, const double* sw, double* out,
                       std::size_t n) {
  const __m256d vfi = _mm256_set1_pd(fi);
  const __m256d vgi = _mm256_set1_pd(gi);
  const __m256d vxi = _mm256_set1_pd(xi);
  const __m256d vscale = _mm256_set1_pd(scale);
  std::size_t j = 0;
  for (; j + 4 <= n; j += 4) {
    const __m256d num = _mm256_fmsub_pd(vfi, _mm256_loadu_pd(g + j),
                                        _mm256_mul_pd(vgi, _mm256_loadu_pd(f + j)));
    const __m256d den = _mm256_sub_pd(vxi, _mm256_loadu_pd(x + j));
    const __m256d w = _mm256_mul_pd(vscale, _mm256_loadu_pd(sw + j));
    _mm256_storeu_pd(out + j, _mm256_div_pd(_mm256_mul_pd(w, num), den));
  }
  for (; j < n; ++j) {
    out[j] = scale * sw[j] * (fi * g[j] - gi * f[j]) / (xi - x[j]);
  }
}

}  // namespace

extern const KernelTable kAvx2Kernels;
const KernelTable kAvx2Kernels{"avx2", dot_avx2, axpy_avx2, quotient_row_avx2};

}  // namespace edgegap::simd
