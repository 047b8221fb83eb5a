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

#include <vector>

#include "spectra/matrix.hpp"

namespace spectra {

struct NonnegCheck {
  bool nonnegative = false;
  /// Smallest entry of the matrix.
  double margin = 0.0;
};

/// Nonnegative iff the smallest entry is >= -tol.
NonnegCheck is_nonnegative(const DenseMatrix& a, double tol = 0.0);

/// True iff the digraph with an edge i -> j whenever a(i, j) > zero_tol is
/// strongly connected. Throws Error(NotNonnegative) if an entry is below
/// -zero_tol.
bool is_irreducible(const DenseMatrix& a, double zero_tol = 0.0);

struct PerronData {
  double rho = 0.0;
  /// Right Perron vector, strictly positive, entries summing to 1.
  std::vector<double> x;
  /// |A x - rho x|_2
  double residual = 0.0;
  /// True when the power method was skipped or stalled and the vector came
  /// from inverse iteration at the dominant eigenvalue instead.
  bool used_fallback = false;
};

/// Perron root and vector of an irreducible nonnegative matrix.
///
/// Power iteration from the uniform vector; when the dominant modulus gap is
/// below 1e-6 (periodic or nearly periodic matrices) or the power method
/// stalls, falls back to inverse iteration at the eigensolver's dominant
/// eigenvalue. Throws Error(NotIrreducible), Error(NonConvergence).
PerronData perron(const DenseMatrix& a);

/// B = D^{-1} A D with D = diag(Perron vector): a nonnegative matrix with
/// every row sum equal to rho and the same spectrum as A. Returns A itself
/// when the Perron vector is already uniform.
DenseMatrix to_constant_row_sums(const DenseMatrix& a);

/// Same as to_constant_row_sums, also returning the Perron data used.
struct ConstantRowSumForm {
  DenseMatrix matrix;
  PerronData perron;
};
ConstantRowSumForm constant_row_sum_form(const DenseMatrix& a);

/// max_i rowsum_i - min_i rowsum_i
double row_sum_spread(const DenseMatrix& a);

}  // namespace spectra
