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

#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace spectra {

/// Dense row-major real matrix. Square in most uses (A, its normalized form,
/// permutation matrices) but rectangular shapes are allowed for the factors
/// of a low-rank update.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols, double fill = 0.0);
  DenseMatrix(std::initializer_list<std::initializer_list<double>> rows);

  static DenseMatrix identity(std::size_t n);
  /// Throws Error(ShapeMismatch) on ragged input.
  static DenseMatrix from_rows(const std::vector<std::vector<double>>& rows);
  /// Matrix whose columns are the given equal-length vectors.
  static DenseMatrix from_columns(
      const std::vector<std::vector<double>>& columns);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  double& operator()(std::size_t i, std::size_t j) noexcept {
    return data_[i * cols_ + j];
  }
  double operator()(std::size_t i, std::size_t j) const noexcept {
    return data_[i * cols_ + j];
  }

  std::span<double> row(std::size_t i) noexcept {
    return {data_.data() + i * cols_, cols_};
  }
  std::span<const double> row(std::size_t i) const noexcept {
    return {data_.data() + i * cols_, cols_};
  }
  std::vector<double> column(std::size_t j) const;

  std::span<const double> data() const noexcept { return data_; }
  std::span<double> data() noexcept { return data_; }

  bool all_finite() const noexcept;
  std::vector<std::vector<double>> to_rows() const;

  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix matadd(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix matsub(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix transpose(const DenseMatrix& a);
DenseMatrix scaled(const DenseMatrix& a, double s);
std::vector<double> matvec(const DenseMatrix& a, std::span<const double> x);

double frobenius_norm(const DenseMatrix& a) noexcept;
double min_entry(const DenseMatrix& a) noexcept;
std::vector<double> row_sums(const DenseMatrix& a);

/// Permutation as an index map: row i of the matrix form has its single 1
/// in column perm[i].
using Permutation = std::vector<std::size_t>;

bool is_permutation(const Permutation& perm) noexcept;
DenseMatrix permutation_matrix(const Permutation& perm);
/// Inverse of permutation_matrix; throws Error(InvalidArgument) if `q` is
/// not a permutation matrix.
Permutation permutation_from_matrix(const DenseMatrix& q);

/// Q A Q^T, computed by reindexing (exact).
DenseMatrix permute_similarity(const DenseMatrix& a, const Permutation& perm);
DenseMatrix permute_similarity(const DenseMatrix& a, const DenseMatrix& q);

void require_square(const DenseMatrix& a, const char* what);
void require_finite(const DenseMatrix& a, const char* what);

}  // namespace spectra
