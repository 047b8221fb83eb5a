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

#include <cmath>

#include "spectra/kernels.hpp"

namespace spectra::kernels::scalar {

double dot(const double* a, const double* b, std::size_t n) noexcept {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += a[i] * b[i];
  return s;
}

void axpy(double alpha, const double* x, double* y, std::size_t n) noexcept {
  for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

void gemv(const double* a, std::size_t rows, std::size_t cols, const double* x,
          double* y) noexcept {
  for (std::size_t i = 0; i < rows; ++i) y[i] = dot(a + i * cols, x, cols);
}

double max_abs_cross(double ox, double oy, double dx, double dy,
                     const double* xs, const double* ys,
                     std::size_t n) noexcept {
  double best = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double v = std::fabs(dx * (ys[k] - oy) - dy * (xs[k] - ox));
    if (v > best) best = v;
  }
  return best;
}

}  // namespace spectra::kernels::scalar
