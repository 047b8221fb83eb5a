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

#include <span>
#include <vector>

#include "spectra/matrix.hpp"

namespace spectra {

/// Solves A x = b by LU with partial pivoting. Throws Error(InvalidArgument)
/// for an exactly singular A.
std::vector<double> solve(const DenseMatrix& a, std::span<const double> b);
DenseMatrix inverse(const DenseMatrix& a);
double determinant(const DenseMatrix& a);

/// Singular values in descending order (one-sided Jacobi), accurate to
/// roughly eps * sigma_max even for the smallest ones.
std::vector<double> singular_values(const DenseMatrix& a);

/// Singular values of the complex matrix re + i*im, descending.
std::vector<double> singular_values(const DenseMatrix& re,
                                    const DenseMatrix& im);

}  // namespace spectra
