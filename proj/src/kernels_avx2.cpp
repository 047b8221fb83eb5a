// Copyright 2026 The Spectra Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "spectra/kernels.hpp"

#if defined(__x86_64__) || defined(__i386__)
#define SPECTRA_HAVE_X86 1
#include <immintrin.h>
#else
#define SPECTRA_HAVE_X86 0
#endif

namespace spectra::kernels::avx2 {

#if SPECTRA_HAVE_X86

// Only the avx2 target is enabled here (not fma): products and differences
// must round exactly like the scalar reference for the elementwise kernels.
#define SPECTRA_AVX2 __attribute__((target("avx2")))

bool supported() noexcept { return __builtin_cpu_supports("avx2"); }

namespace {

SPECTRA_AVX2 inline double hsum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

SPECTRA_AVX2 inline double hmax(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d m = _mm_max_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_max_sd(m, _mm_unpackhi_pd(m, m)));
}

}  // namespace

SPECTRA_AVX2 double dot(const double* a, const double* b,
                        std::size_t n) noexcept {
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    acc0 = _mm256_add_pd(
        acc0, _mm256_mul_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i)));
    acc1 = _mm256_add_pd(acc1, _mm256_mul_pd(_mm256_loadu_pd(a + i + 4),
                                             _mm256_loadu_pd(b + i + 4)));
  }
  for (; i + 4 <= n; i += 4) {
    acc0 = _mm256_add_pd(
        acc0, _mm256_mul_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i)));
  }
  double s = hsum(_mm256_add_pd(acc0, acc1));
  for (; i < n; ++i) s += a[i] * b[i];
  return s;
}

SPECTRA_AVX2 void axpy(double alpha, const double* x, double* y,
                       std::size_t n) noexcept {
  const __m256d va = _mm256_set1_pd(alpha);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d prod = _mm256_mul_pd(va, _mm256_loadu_pd(x + i));
    _mm256_storeu_pd(y + i, _mm256_add_pd(_mm256_loadu_pd(y + i), prod));
  }
  for (; i < n; ++i) y[i] += alpha * x[i];
}

SPECTRA_AVX2 void gemv(const double* a, std::size_t rows, std::size_t cols,
                       const double* x, double* y) noexcept {
  for (std::size_t i = 0; i < rows; ++i) y[i] = dot(a + i * cols, x, cols);
}

SPECTRA_AVX2 double max_abs_cross(double ox, double oy, double dx, double dy,
                                  const double* xs, const double* ys,
                                  std::size_t n) noexcept {
  const __m256d vox = _mm256_set1_pd(ox);
  const __m256d voy = _mm256_set1_pd(oy);
  const __m256d vdx = _mm256_set1_pd(dx);
  const __m256d vdy = _mm256_set1_pd(dy);
  const __m256d sign = _mm256_set1_pd(-0.0);
  __m256d best = _mm256_setzero_pd();
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) {
    const __m256d ry = _mm256_sub_pd(_mm256_loadu_pd(ys + k), voy);
    const __m256d rx = _mm256_sub_pd(_mm256_loadu_pd(xs + k), vox);
    const __m256d cross =
        _mm256_sub_pd(_mm256_mul_pd(vdx, ry), _mm256_mul_pd(vdy, rx));
    best = _mm256_max_pd(best, _mm256_andnot_pd(sign, cross));
  }
  double out = hmax(best);
  const double tail = scalar::max_abs_cross(ox, oy, dx, dy, xs + k, ys + k,
                                            n - k);
  return tail > out ? tail : out;
}

#undef SPECTRA_AVX2

#else  // !SPECTRA_HAVE_X86

bool supported() noexcept { return false; }

double dot(const double* a, const double* b, std::size_t n) noexcept {
  return scalar::dot(a, b, n);
}
void axpy(double alpha, const double* x, double* y, std::size_t n) noexcept {
  scalar::axpy(alpha, x, y, n);
}
void gemv(const double* a, std::size_t rows, std::size_t cols, const double* x,
          double* y) noexcept {
  scalar::gemv(a, rows, cols, x, y);
}
double max_abs_cross(double ox, double oy, double dx, double dy,
                     const double* xs, const double* ys,
                     std::size_t n) noexcept {
  return scalar::max_abs_cross(ox, oy, dx, dy, xs, ys, n);
}

#endif

}  // namespace spectra::kernels::avx2
