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

// Shifting a complex conjugate eigenvalue pair of a nonnegative matrix.
//
// Given an irreducible nonnegative A with eigenvalues rho (Perron root),
// b +- ic and the rest, shift_complex_pair builds a nonnegative matrix with
// eigenvalues rho + t_tilde, b + t +- ic and the rest unchanged, for any
// t_tilde >= gamma(n) * t. The construction:
//
//   1. Bring A to constant row sums rho by diagonal similarity, so that the
//      all-ones vector e is the Perron eigenvector.
//   2. Take the real and imaginary parts u, v of an eigenvector for b + ic
//      and view row l as the planar point P_l = (u_l, v_l).
//   3. Pick the triple (p, q, r) maximizing det3(P_p, P_q, P_r) and the dual
//      vectors x, y supported on it (x.e = 0, x.u = 1, x.v = 0 and
//      y.e = 0, y.u = 0, y.v = 1).
//   4. alpha = [u|v][x|y]^T restricted to the triple columns; i, j, k are the
//      column minimizers and alpha_sum = alpha(i,0) + alpha(j,1) +
//      alpha(k,2), which lies in [-gamma(n), -1].
//   5. delta = (t_tilde + t * alpha_sum) / 3 and
//      z = delta - t * (alpha(i,0), alpha(j,1), alpha(k,2)) on the triple.
//   6. A_out = A + [e|u|v] [z|tx|ty]^T, a rank-3 update that moves exactly
//      the eigenvalues rho and b +- ic. Every entry of the update is
//      t * (alpha(l,m) - column min) + delta >= 0.

#include <array>
#include <cstddef>
#include <vector>

#include "spectra/matrix.hpp"
#include "spectra/polygeom.hpp"
#include "spectra/spectrum.hpp"

namespace spectra {

/// A + X C, for X (n x r) spanning an invariant subspace with A X = X D.
/// The spectrum of the result is eig(D + C X) together with the eigenvalues
/// of A not belonging to D.
///
/// Throws Error(RankDeficientX) if the smallest singular value of X is at
/// most 1e-10 |X|_F, Error(NotInvariant) if |A X - X D|_F exceeds
/// 1e-8 (1 + |A|_F) |X|_F, and Error(ShapeMismatch).
DenseMatrix rank_update(const DenseMatrix& a, const DenseMatrix& x, const DenseMatrix& d,
                        const DenseMatrix& c);

struct PlanOptions {
  /// A requested pair b + ic is snapped to the nearest computed eigenvalue
  /// if it lies within this distance. Negative: 1e-6 (1 + |A|_F).
  double pair_tol = -1.0;
  /// The pair is simple iff the second smallest singular value of
  /// A - (b + ic) I exceeds this. Negative: 1e-8 (1 + |A|_F).
  double simple_tol = -1.0;
  /// Allowed row-sum spread. Negative: 1e-8 (1 + |A|_F).
  double row_sum_tol = -1.0;
};

struct PerturbPlan {
  std::size_t n = 0;
  std::vector<double> u;
  std::vector<double> v;
  /// The pair actually used (after snapping to a computed eigenvalue).
  double b = 0.0;
  double c = 0.0;
  double rho = 0.0;
  /// Counterclockwise maximizing triple: max_det = det3(P_t0, P_t1, P_t2).
  IndexTriple triple{};
  /// Permutation moving the triple to positions 0, 1, 2 (the remaining
  /// indices follow in increasing order).
  Permutation permutation;
  double max_det = 0.0;
  /// Supported on the triple.
  std::vector<double> x;
  std::vector<double> y;
  /// n x 3: alpha(l, m) = u_l x_{t_m} + v_l y_{t_m}.
  DenseMatrix alpha;
  /// Row indices (i, j, k) of the column minima of alpha.
  IndexTriple minimizers{};
  double alpha_sum = 0.0;
  double t = 0.0;
  double t_tilde = 0.0;
  double delta = 0.0;
  /// Supported on the triple.
  std::vector<double> z;
};

/// Builds every intermediate of the construction for a matrix that already
/// has constant row sums (see to_constant_row_sums).
///
/// Errors: DegeneratePair (c == 0 or the nearest eigenvalue is real),
/// NotAnEigenvalue, DefectivePair (pair not simple), NotConstantRowSums,
/// CollinearEigenvectors, InvalidArgument (n < 3, t < 0, t_tilde < 0).
PerturbPlan build_plan(const DenseMatrix& a, double b, double c, double t, double t_tilde,
                       const PlanOptions& options = {});

/// Smallest t_tilde for which the plan's update stays nonnegative:
/// -t * alpha_sum, which lies in [t, gamma(n) t].
double construction_threshold(const PerturbPlan& plan) noexcept;

/// n x 3 table of the update's nonzero columns:
/// beta(l, m) = t (alpha(l, m) - alpha(min_m, m)) + delta.
DenseMatrix beta_table(const PerturbPlan& plan);

/// [z|tx|ty]^T [e|u|v]; upper triangular with diagonal (t_tilde, t, t).
DenseMatrix interaction_matrix(const PerturbPlan& plan);

/// c(l, m) = alpha(l, m) - alpha(anchor_m, m) with anchors (t1, t2, t1)
/// for the three columns; equals det3 with P_l substituted into slot m,
/// divided by max_det, hence at most 1 = c(t_m, m).
DenseMatrix c_table(const PerturbPlan& plan);

struct ShiftOptions {
  /// Nonnegativity and threshold slack.
  double tol = 1e-9;
  /// Spectral match tolerance for the postcondition. Negative:
  /// 1e-8 (1 + |A|_F).
  double match_tol = -1.0;
  PlanOptions plan;
};

struct Certificate {
  DenseMatrix input;
  /// Constant-row-sum form of the input the update is applied to.
  DenseMatrix normalized;
  DenseMatrix output;
  Spectrum spectrum_before;
  Spectrum spectrum_after;
  /// {rho + t_tilde, b + t +- ic} with the rest of spectrum_before.
  Spectrum spectrum_target;
  double spectral_deviation = 0.0;
  double nonneg_margin = 0.0;
  double t = 0.0;
  double t_tilde = 0.0;
  /// construction_threshold(plan); the least t_tilde this construction
  /// accepts, not a claim about all nonnegative realizations.
  double threshold = 0.0;
  double gamma_n = 0.0;
  PerturbPlan plan;
};

/// Runs the full construction and verifies its output.
///
/// Errors: NotNonnegative, NotIrreducible, everything build_plan raises,
/// ThresholdViolated (t_tilde < threshold - tol) and PostconditionFailed
/// (output not nonnegative within tol, or spectrum off target by more than
/// match_tol).
Certificate shift_complex_pair(const DenseMatrix& a, double b, double c, double t,
                               double t_tilde, const ShiftOptions& options = {});

}  // namespace spectra
