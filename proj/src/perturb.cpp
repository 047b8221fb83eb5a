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

#include "spectra/perturb.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "spectra/eigen.hpp"
#include "spectra/error.hpp"
#include "spectra/linalg.hpp"
#include "spectra/nonneg.hpp"

namespace spectra {

namespace {

double or_default(double value, double fallback) { return value < 0.0 ? fallback : value; }

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

}  // namespace

DenseMatrix rank_update(const DenseMatrix& a, const DenseMatrix& x, const DenseMatrix& d,
                        const DenseMatrix& c) {
  require_square(a, "rank_update A");
  require_square(d, "rank_update D");
  const std::size_t n = a.rows();
  const std::size_t r = x.cols();
  if (x.rows() != n || d.rows() != r || c.rows() != r || c.cols() != n) {
    fail(ErrorKind::ShapeMismatch, "rank_update: need X n x r, D r x r, C r x n");
  }
  const double xnorm = frobenius_norm(x);
  if (r > 0) {
    const auto sv = singular_values(x);
    if (!(sv.back() > 1e-10 * xnorm)) {
      fail(ErrorKind::RankDeficientX, "smallest singular value of X is " + fmt(sv.back()));
    }
  }
  const double mismatch = frobenius_norm(matsub(matmul(a, x), matmul(x, d)));
  const double bound = 1e-8 * (1.0 + frobenius_norm(a)) * xnorm;
  if (!(mismatch <= bound)) {
    fail(ErrorKind::NotInvariant, "|AX - XD| = " + fmt(mismatch) + " exceeds " + fmt(bound));
  }
  return matadd(a, matmul(x, c));
}

PerturbPlan build_plan(const DenseMatrix& a, double b, double c, double t, double t_tilde,
                       const PlanOptions& options) {
  require_square(a, "build_plan");
  require_finite(a, "build_plan");
  const std::size_t n = a.rows();
  if (n < 3) fail(ErrorKind::InvalidArgument, "build_plan needs n >= 3");
  if (!std::isfinite(b) || !std::isfinite(c)) fail(ErrorKind::InvalidArgument, "b, c must be finite");
  if (c == 0.0) fail(ErrorKind::DegeneratePair, "c must be nonzero");
  if (!(t >= 0.0) || !std::isfinite(t)) fail(ErrorKind::InvalidArgument, "t must be >= 0");
  if (!(t_tilde >= 0.0) || !std::isfinite(t_tilde)) {
    fail(ErrorKind::InvalidArgument, "t_tilde must be >= 0");
  }
  const double scale = 1.0 + frobenius_norm(a);

  const double spread = row_sum_spread(a);
  if (!(spread <= or_default(options.row_sum_tol, 1e-8 * scale))) {
    fail(ErrorKind::NotConstantRowSums, "row sums spread by " + fmt(spread));
  }
  const auto sums = row_sums(a);

  PerturbPlan plan;
  plan.n = n;
  plan.rho = std::accumulate(sums.begin(), sums.end(), 0.0) / static_cast<double>(n);
  plan.t = t;
  plan.t_tilde = t_tilde;

  // Snap the requested pair onto the computed spectrum.
  const Spectrum spec = eigenvalues(a);
  const Complex want(b, c);
  const auto nearest = std::min_element(
      spec.values.begin(), spec.values.end(),
      [&](const Complex& p, const Complex& q) { return std::abs(p - want) < std::abs(q - want); });
  const double pair_tol = or_default(options.pair_tol, 1e-6 * scale);
  if (!(std::abs(*nearest - want) <= pair_tol)) {
    fail(ErrorKind::NotAnEigenvalue, fmt(b) + (c < 0 ? "-" : "+") + fmt(std::fabs(c)) +
                                         "i is " + fmt(std::abs(*nearest - want)) +
                                         " away from the nearest eigenvalue");
  }
  if (nearest->imag() == 0.0) {
    fail(ErrorKind::DegeneratePair, "nearest eigenvalue is real");
  }
  plan.b = nearest->real();
  plan.c = nearest->imag();

  const auto sv = shifted_singular_values(a, plan.b, plan.c);
  const double simple_tol = or_default(options.simple_tol, 1e-8 * scale);
  if (!(sv[n - 2] > simple_tol)) {
    fail(ErrorKind::DefectivePair, "eigenvalue pair is not simple (sigma_{n-1} = " +
                                       fmt(sv[n - 2]) + ")");
  }

  PairVectors pv = real_pair_eigenvectors(a, plan.b, plan.c);
  plan.u = std::move(pv.u);
  plan.v = std::move(pv.v);
  const auto& u = plan.u;
  const auto& v = plan.v;
  auto point = [&](std::size_t l) { return Point{u[l], v[l]}; };

  // Largest oriented triangle among the points (u_l, v_l).
  double best = 0.0;
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = p + 1; q < n; ++q) {
      for (std::size_t r = q + 1; r < n; ++r) {
        const double d = det3(point(p), point(q), point(r));
        if (d > best) {
          best = d;
          plan.triple = {p, q, r};
        } else if (-d > best) {
          best = -d;
          plan.triple = {p, r, q};
        }
      }
    }
  }
  double coord = 0.0;
  for (std::size_t l = 0; l < n; ++l) coord = std::max({coord, std::fabs(u[l]), std::fabs(v[l])});
  if (!(best > 1e-12 * coord * coord)) {
    fail(ErrorKind::CollinearEigenvectors, "e, u, v are numerically dependent");
  }
  plan.max_det = best;

  const auto [p1, p2, p3] = plan.triple;
  plan.permutation = {p1, p2, p3};
  for (std::size_t l = 0; l < n; ++l) {
    if (l != p1 && l != p2 && l != p3) plan.permutation.push_back(l);
  }

  plan.x.assign(n, 0.0);
  plan.y.assign(n, 0.0);
  plan.x[p1] = (v[p2] - v[p3]) / best;
  plan.x[p2] = (v[p3] - v[p1]) / best;
  plan.x[p3] = (v[p1] - v[p2]) / best;
  plan.y[p1] = (u[p3] - u[p2]) / best;
  plan.y[p2] = (u[p1] - u[p3]) / best;
  plan.y[p3] = (u[p2] - u[p1]) / best;

  plan.alpha = DenseMatrix(n, 3);
  for (std::size_t l = 0; l < n; ++l) {
    for (std::size_t m = 0; m < 3; ++m) {
      const std::size_t col = plan.triple[m];
      plan.alpha(l, m) = u[l] * plan.x[col] + v[l] * plan.y[col];
    }
  }
  for (std::size_t m = 0; m < 3; ++m) {
    std::size_t arg = 0;
    for (std::size_t l = 1; l < n; ++l) {
      if (plan.alpha(l, m) < plan.alpha(arg, m)) arg = l;
    }
    plan.minimizers[m] = arg;
  }
  const auto [i, j, k] = plan.minimizers;
  plan.alpha_sum = plan.alpha(i, 0) + plan.alpha(j, 1) + plan.alpha(k, 2);
  plan.delta = (t_tilde + t * plan.alpha_sum) / 3.0;
  plan.z.assign(n, 0.0);
  for (std::size_t m = 0; m < 3; ++m) {
    plan.z[plan.triple[m]] = -t * plan.alpha(plan.minimizers[m], m) + plan.delta;
  }
  return plan;
}

double construction_threshold(const PerturbPlan& plan) noexcept {
  return std::max(0.0, -plan.t * plan.alpha_sum);
}

DenseMatrix beta_table(const PerturbPlan& plan) {
  DenseMatrix beta(plan.n, 3);
  for (std::size_t l = 0; l < plan.n; ++l) {
    for (std::size_t m = 0; m < 3; ++m) {
      beta(l, m) = plan.t * (plan.alpha(l, m) - plan.alpha(plan.minimizers[m], m)) + plan.delta;
    }
  }
  return beta;
}

DenseMatrix interaction_matrix(const PerturbPlan& plan) {
  const std::vector<double> e(plan.n, 1.0);
  std::vector<double> tx(plan.n), ty(plan.n);
  for (std::size_t l = 0; l < plan.n; ++l) {
    tx[l] = plan.t * plan.x[l];
    ty[l] = plan.t * plan.y[l];
  }
  return matmul(transpose(DenseMatrix::from_columns({plan.z, tx, ty})),
                DenseMatrix::from_columns({e, plan.u, plan.v}));
}

DenseMatrix c_table(const PerturbPlan& plan) {
  const std::array<std::size_t, 3> anchor = {plan.triple[1], plan.triple[2], plan.triple[1]};
  DenseMatrix out(plan.n, 3);
  for (std::size_t l = 0; l < plan.n; ++l) {
    for (std::size_t m = 0; m < 3; ++m) out(l, m) = plan.alpha(l, m) - plan.alpha(anchor[m], m);
  }
  return out;
}

Certificate shift_complex_pair(const DenseMatrix& a, double b, double c, double t,
                               double t_tilde, const ShiftOptions& options) {
  require_square(a, "shift_complex_pair");
  require_finite(a, "shift_complex_pair");
  const std::size_t n = a.rows();
  if (n < 3) fail(ErrorKind::InvalidArgument, "shift_complex_pair needs n >= 3");
  const NonnegCheck nn = is_nonnegative(a);
  if (!nn.nonnegative) {
    fail(ErrorKind::NotNonnegative, "input has entry " + fmt(nn.margin));
  }
  if (!is_irreducible(a)) fail(ErrorKind::NotIrreducible, "input matrix is reducible");

  Certificate cert;
  cert.input = a;
  cert.t = t;
  cert.t_tilde = t_tilde;
  cert.gamma_n = gamma(static_cast<int>(n));
  cert.spectrum_before = eigenvalues(a);
  cert.normalized = to_constant_row_sums(a);
  cert.plan = build_plan(cert.normalized, b, c, t, t_tilde, options.plan);
  const PerturbPlan& plan = cert.plan;
  cert.threshold = construction_threshold(plan);
  if (t_tilde < cert.threshold - options.tol) {
    fail(ErrorKind::ThresholdViolated, "t_tilde = " + fmt(t_tilde) +
                                           " is below the construction threshold " +
                                           fmt(cert.threshold));
  }

  // A_out = A' + [e|u|v] [z|tx|ty]^T, with [e|u|v] invariant under A'.
  const std::vector<double> e(n, 1.0);
  const DenseMatrix basis = DenseMatrix::from_columns({e, plan.u, plan.v});
  const DenseMatrix block = {{plan.rho, 0.0, 0.0}, {0.0, plan.b, plan.c}, {0.0, -plan.c, plan.b}};
  DenseMatrix update(3, n);
  for (std::size_t l = 0; l < n; ++l) {
    update(0, l) = plan.z[l];
    update(1, l) = t * plan.x[l];
    update(2, l) = t * plan.y[l];
  }
  cert.output = rank_update(cert.normalized, basis, block, update);

  cert.nonneg_margin = min_entry(cert.output);
  cert.spectrum_after = eigenvalues(cert.output);
  const Complex shifted(plan.b + t, plan.c);
  cert.spectrum_target = merge(
      remove_nearest(cert.spectrum_before, {Complex(plan.rho, 0.0), Complex(plan.b, plan.c),
                                            Complex(plan.b, -plan.c)}),
      Spectrum{Complex(plan.rho + t_tilde, 0.0), shifted, std::conj(shifted)});
  const double match_tol = or_default(options.match_tol, 1e-8 * (1.0 + frobenius_norm(a)));
  const MatchReport match = match_spectra(cert.spectrum_after, cert.spectrum_target, match_tol);
  cert.spectral_deviation = match.bottleneck;

  if (cert.nonneg_margin < -options.tol) {
    fail(ErrorKind::PostconditionFailed,
         "output has entry " + fmt(cert.nonneg_margin) + " below -tol");
  }
  if (!match.matched) {
    fail(ErrorKind::PostconditionFailed, "output spectrum deviates by " +
                                             fmt(match.bottleneck) + " > " + fmt(match_tol));
  }
  return cert;
}

}  // namespace spectra
