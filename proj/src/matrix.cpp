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

#include "spectra/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "spectra/error.hpp"
#include "spectra/kernels.hpp"

namespace spectra {

namespace {

std::string shape(const DenseMatrix& a) {
  return std::to_string(a.rows()) + "x" + std::to_string(a.cols());
}

void require_same_shape(const DenseMatrix& a, const DenseMatrix& b,
                        const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    fail(ErrorKind::ShapeMismatch,
         std::string(what) + ": " + shape(a) + " vs " + shape(b));
  }
}

}  // namespace

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols, double fill)
    : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

DenseMatrix::DenseMatrix(
    std::initializer_list<std::initializer_list<double>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) fail(ErrorKind::ShapeMismatch, "ragged rows");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

DenseMatrix DenseMatrix::identity(std::size_t n) {
  DenseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

DenseMatrix DenseMatrix::from_rows(
    const std::vector<std::vector<double>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  DenseMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) {
      fail(ErrorKind::ShapeMismatch, "row " + std::to_string(i) + " has " +
                                         std::to_string(rows[i].size()) +
                                         " entries, expected " +
                                         std::to_string(cols));
    }
    std::copy(rows[i].begin(), rows[i].end(), m.row(i).begin());
  }
  return m;
}

DenseMatrix DenseMatrix::from_columns(
    const std::vector<std::vector<double>>& columns) {
  const std::size_t rows = columns.empty() ? 0 : columns.front().size();
  DenseMatrix m(rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != rows) {
      fail(ErrorKind::ShapeMismatch, "ragged columns");
    }
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
  }
  return m;
}

std::vector<double> DenseMatrix::column(std::size_t j) const {
  std::vector<double> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
  return out;
}

bool DenseMatrix::all_finite() const noexcept {
  return std::all_of(data_.begin(), data_.end(),
                     [](double x) { return std::isfinite(x); });
}

std::vector<std::vector<double>> DenseMatrix::to_rows() const {
  std::vector<std::vector<double>> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    out[i].assign(row(i).begin(), row(i).end());
  }
  return out;
}

DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.cols() != b.rows()) {
    fail(ErrorKind::ShapeMismatch, "matmul: " + shape(a) + " * " + shape(b));
  }
  DenseMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const double aik = a(i, k);
      if (aik != 0.0) kernels::axpy(aik, b.row(k), c.row(i));
    }
  }
  return c;
}

DenseMatrix matadd(const DenseMatrix& a, const DenseMatrix& b) {
  require_same_shape(a, b, "matadd");
  DenseMatrix c = a;
  kernels::axpy(1.0, b.data(), c.data());
  return c;
}

DenseMatrix matsub(const DenseMatrix& a, const DenseMatrix& b) {
  require_same_shape(a, b, "matsub");
  DenseMatrix c = a;
  kernels::axpy(-1.0, b.data(), c.data());
  return c;
}

DenseMatrix transpose(const DenseMatrix& a) {
  DenseMatrix t(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
  }
  return t;
}

DenseMatrix scaled(const DenseMatrix& a, double s) {
  DenseMatrix c = a;
  for (double& x : c.data()) x *= s;
  return c;
}

std::vector<double> matvec(const DenseMatrix& a, std::span<const double> x) {
  std::vector<double> y(a.rows());
  kernels::gemv(a.data(), a.rows(), a.cols(), x, y);
  return y;
}

double frobenius_norm(const DenseMatrix& a) noexcept {
  double s = 0.0;
  for (double x : a.data()) s += x * x;
  return std::sqrt(s);
}

double min_entry(const DenseMatrix& a) noexcept {
  const auto d = a.data();
  return d.empty() ? 0.0 : *std::min_element(d.begin(), d.end());
}

std::vector<double> row_sums(const DenseMatrix& a) {
  std::vector<double> s(a.rows(), 0.0);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (double x : a.row(i)) s[i] += x;
  }
  return s;
}

bool is_permutation(const Permutation& perm) noexcept {
  std::vector<bool> seen(perm.size(), false);
  for (std::size_t p : perm) {
    if (p >= perm.size() || seen[p]) return false;
    seen[p] = true;
  }
  return true;
}

DenseMatrix permutation_matrix(const Permutation& perm) {
  if (!is_permutation(perm)) fail(ErrorKind::InvalidArgument, "not a permutation");
  DenseMatrix q(perm.size(), perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) q(i, perm[i]) = 1.0;
  return q;
}

Permutation permutation_from_matrix(const DenseMatrix& q) {
  require_square(q, "permutation matrix");
  Permutation perm(q.rows());
  for (std::size_t i = 0; i < q.rows(); ++i) {
    std::size_t ones = 0;
    for (std::size_t j = 0; j < q.cols(); ++j) {
      if (q(i, j) == 1.0) {
        perm[i] = j;
        ++ones;
      } else if (q(i, j) != 0.0) {
        ones = 2;
      }
    }
    if (ones != 1) fail(ErrorKind::InvalidArgument, "not a permutation matrix");
  }
  if (!is_permutation(perm)) {
    fail(ErrorKind::InvalidArgument, "not a permutation matrix");
  }
  return perm;
}

DenseMatrix permute_similarity(const DenseMatrix& a, const Permutation& perm) {
  require_square(a, "permute_similarity");
  if (perm.size() != a.rows()) {
    fail(ErrorKind::ShapeMismatch, "permutation length " +
                                       std::to_string(perm.size()) +
                                       " for " + shape(a));
  }
  if (!is_permutation(perm)) fail(ErrorKind::InvalidArgument, "not a permutation");
  DenseMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(perm[i], perm[j]);
  }
  return out;
}

DenseMatrix permute_similarity(const DenseMatrix& a, const DenseMatrix& q) {
  if (q.rows() != a.rows()) {
    fail(ErrorKind::ShapeMismatch, "permute_similarity: " + shape(a) +
                                       " with " + shape(q));
  }
  return permute_similarity(a, permutation_from_matrix(q));
}

void require_square(const DenseMatrix& a, const char* what) {
  if (!a.is_square()) {
    fail(ErrorKind::ShapeMismatch,
         std::string(what) + ": expected a square matrix, got " + shape(a));
  }
}

void require_finite(const DenseMatrix& a, const char* what) {
  if (!a.all_finite()) {
    fail(ErrorKind::NonFinite, std::string(what) + ": non-finite entry");
  }
}

}  // namespace spectra
