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

#include "spectra/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <utility>

#include "spectra/error.hpp"

namespace spectra {

namespace {

struct Lu {
  DenseMatrix lu;
  std::vector<std::size_t> pivot;
  int sign = 1;
  bool singular = false;
};

Lu factor(const DenseMatrix& a) {
  require_square(a, "lu");
  Lu f{a, std::vector<std::size_t>(a.rows()), 1, false};
  DenseMatrix& m = f.lu;
  const std::size_t n = m.rows();
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (std::fabs(m(i, k)) > std::fabs(m(p, k))) p = i;
    }
    f.pivot[k] = p;
    if (p != k) {
      std::swap_ranges(m.row(k).begin(), m.row(k).end(), m.row(p).begin());
      f.sign = -f.sign;
    }
    if (m(k, k) == 0.0) {
      f.singular = true;
      continue;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      const double l = m(i, k) / m(k, k);
      m(i, k) = l;
      for (std::size_t j = k + 1; j < n; ++j) m(i, j) -= l * m(k, j);
    }
  }
  return f;
}

std::vector<double> lu_solve(const Lu& f, std::span<const double> b) {
  const DenseMatrix& m = f.lu;
  const std::size_t n = m.rows();
  std::vector<double> x(b.begin(), b.end());
  for (std::size_t k = 0; k < n; ++k) std::swap(x[k], x[f.pivot[k]]);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) x[i] -= m(i, j) * x[j];
  }
  for (std::size_t i = n; i-- > 0;) {
    for (std::size_t j = i + 1; j < n; ++j) x[i] -= m(i, j) * x[j];
    x[i] /= m(i, i);
  }
  return x;
}

// Hestenes one-sided Jacobi on the columns of `u` (rows >= cols).
std::vector<double> jacobi_column_norms(DenseMatrix u) {
  const std::size_t m = u.rows();
  const std::size_t n = u.cols();
  const double eps = std::numeric_limits<double>::epsilon();
  for (int sweep = 0; sweep < 80; ++sweep) {
    bool rotated = false;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        double alpha = 0.0, beta = 0.0, gamma = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
          alpha += u(i, p) * u(i, p);
          beta += u(i, q) * u(i, q);
          gamma += u(i, p) * u(i, q);
        }
        if (gamma == 0.0 || std::fabs(gamma) <= eps * std::sqrt(alpha * beta)) {
          continue;
        }
        rotated = true;
        const double zeta = (beta - alpha) / (2.0 * gamma);
        const double t = std::copysign(1.0, zeta) /
                         (std::fabs(zeta) + std::sqrt(1.0 + zeta * zeta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = c * t;
        for (std::size_t i = 0; i < m; ++i) {
          const double up = u(i, p);
          const double uq = u(i, q);
          u(i, p) = c * up - s * uq;
          u(i, q) = s * up + c * uq;
        }
      }
    }
    if (!rotated) break;
  }
  std::vector<double> sv(n);
  for (std::size_t j = 0; j < n; ++j) {
    double s = 0.0;
    for (std::size_t i = 0; i < m; ++i) s += u(i, j) * u(i, j);
    sv[j] = std::sqrt(s);
  }
  std::sort(sv.begin(), sv.end(), std::greater<>());
  return sv;
}

}  // namespace

std::vector<double> solve(const DenseMatrix& a, std::span<const double> b) {
  if (b.size() != a.rows()) fail(ErrorKind::ShapeMismatch, "solve: rhs length");
  const Lu f = factor(a);
  if (f.singular) fail(ErrorKind::InvalidArgument, "solve: singular matrix");
  return lu_solve(f, b);
}

DenseMatrix inverse(const DenseMatrix& a) {
  const Lu f = factor(a);
  if (f.singular) fail(ErrorKind::InvalidArgument, "inverse: singular matrix");
  const std::size_t n = a.rows();
  DenseMatrix inv(n, n);
  std::vector<double> e(n, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    e[j] = 1.0;
    const auto col = lu_solve(f, e);
    for (std::size_t i = 0; i < n; ++i) inv(i, j) = col[i];
    e[j] = 0.0;
  }
  return inv;
}

double determinant(const DenseMatrix& a) {
  const Lu f = factor(a);
  if (f.singular) return 0.0;
  double det = f.sign;
  for (std::size_t i = 0; i < a.rows(); ++i) det *= f.lu(i, i);
  return det;
}

std::vector<double> singular_values(const DenseMatrix& a) {
  if (a.rows() >= a.cols()) return jacobi_column_norms(a);
  return jacobi_column_norms(transpose(a));
}

std::vector<double> singular_values(const DenseMatrix& re,
                                    const DenseMatrix& im) {
  if (re.rows() != im.rows() || re.cols() != im.cols()) {
    fail(ErrorKind::ShapeMismatch, "complex singular values: part shapes");
  }
  // [[re, -im], [im, re]] has every singular value of re + i*im twice.
  const std::size_t m = re.rows();
  const std::size_t n = re.cols();
  DenseMatrix big(2 * m, 2 * n);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      big(i, j) = re(i, j);
      big(i, n + j) = -im(i, j);
      big(m + i, j) = im(i, j);
      big(m + i, n + j) = re(i, j);
    }
  }
  const auto doubled = singular_values(big);
  std::vector<double> sv;
  sv.reserve(doubled.size() / 2);
  for (std::size_t k = 0; k < doubled.size(); k += 2) sv.push_back(doubled[k]);
  return sv;
}

}  // namespace spectra
