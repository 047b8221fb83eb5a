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
#include "spectra/spectrum.hpp"

namespace spectra {

/// All n eigenvalues of a real square matrix, with multiplicity.
///
/// Balances, reduces to upper Hessenberg form with Householder reflectors
/// and runs Francis double-shift QR with deflation. Complex eigenvalues come
/// out as exact conjugate pairs. Values are sorted by decreasing real part,
/// then decreasing imaginary part.
///
/// Throws Error(NonConvergence) after 100*n QR sweeps.
Spectrum eigenvalues(const DenseMatrix& a);

/// Real and imaginary parts of an eigenvector u + iv for b + ic, so that
/// A [u|v] = [u|v] [[b, c], [-c, b]].
struct PairVectors {
  std::vector<double> u;
  std::vector<double> v;
  /// Frobenius norm of A[u|v] - [u|v][[b, c], [-c, b]].
  double residual = 0.0;
};

/// Inverse iteration on the complex shifted system A - (b + ic)I.
///
/// The result is normalized so that |u|^2 + |v|^2 = 1 and the largest
/// component of u + iv is real and positive. Throws Error(DegeneratePair)
/// for c == 0, Error(NotAnEigenvalue) if the residual exceeds
/// 1e-8 * (1 + |A|_F), and Error(DefectivePair) if [u|v] is numerically rank
/// deficient.
PairVectors real_pair_eigenvectors(const DenseMatrix& a, double b, double c);

/// Singular values (descending) of A - (b + ic) I.
std::vector<double> shifted_singular_values(const DenseMatrix& a, double b,
                                            double c);

}  // namespace spectra
