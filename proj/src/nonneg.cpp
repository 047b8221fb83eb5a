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

#include "spectra/nonneg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "spectra/eigen.hpp"
#include "spectra/error.hpp"
#include "spectra/linalg.hpp"

namespace spectra {

namespace {

constexpr int kPowerBudget = 20000;
constexpr double kGapThreshold = 1e-6;
// Componentwise relative residual accepted by the power iteration. Products
// of nonnegative data carry no cancellation, so this is reachable for n <= 64.
constexpr double kRelativeTol = 1e-13;

std::vector<bool> reachable(const DenseMatrix& a, double zero_tol, bool reverse) {
  const std::size_t n = a.rows();
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  while (!stack.empty()) {
    const std::size_t i = stack.back();
    stack.pop_back();
    for (std::size_t j = 0; j < n; ++j) {
      const double w = reverse ? a(j, i) : a(i, j);
      if (!seen[j] && w > zero_tol) {
        seen[j] = true;
        stack.push_back(j);
      }
    }
  }
  return seen;
}

double residual_norm(const DenseMatrix& a, const std::vector<double>& x, double rho) {
  const auto y = matvec(a, x);
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double r = y[i] - rho * x[i];
    s += r * r;
  }
  return std::sqrt(s);
}

std::vector<double> inverse_iteration(const DenseMatrix& a, double rho, double scale) {
  const std::size_t n = a.rows();
  std::vector<double> x(n, 1.0 / static_cast<double>(n));
  double offset = 1e-12 * scale;
  for (int attempt = 0; attempt < 4; ++attempt, offset *= 1e3) {
    DenseMatrix shifted = a;
    for (std::size_t i = 0; i < n; ++i) shifted(i, i) -= rho + offset;
    try {
      std::vector<double> w = x;
      for (int it = 0; it < 3; ++it) {
        w = solve(shifted, w);
        const double s = std::accumulate(w.begin(), w.end(), 0.0);
        if (s == 0.0 || !std::isfinite(s)) break;
        for (double& wi : w) wi /= s;
      }
      return w;
    } catch (const Error&) {
      continue;  // singular at this offset; move further away
    }
  }
  fail(ErrorKind::NonConvergence, "inverse iteration for the Perron vector failed");
}

// Power iteration on A + shift I from a positive start, normalized to unit
// sum. Stops once every component satisfies |(Ax)_i - rho x_i| <= tol rho x_i.
bool power_polish(const DenseMatrix& a, double shift, std::vector<double>& x, int budget) {
  const std::size_t n = x.size();
  for (int it = 0; it < budget; ++it) {
    std::vector<double> y = matvec(a, x);
    for (std::size_t i = 0; i < n; ++i) y[i] += shift * x[i];
    const double lambda = std::accumulate(y.begin(), y.end(), 0.0);
    if (!(lambda > 0.0)) return false;
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double r = std::fabs(y[i] - lambda * x[i]);
      worst = std::max(worst, x[i] > 0.0 ? r / (lambda * x[i]) : 1.0);
    }
    for (std::size_t i = 0; i < n; ++i) x[i] = y[i] / lambda;
    if (worst <= kRelativeTol) return true;
  }
  return false;
}

}  // namespace

NonnegCheck is_nonnegative(const DenseMatrix& a, double tol) {
  const double m = min_entry(a);
  return {m >= -tol, m};
}

bool is_irreducible(const DenseMatrix& a, double zero_tol) {
  require_square(a, "is_irreducible");
  if (!is_nonnegative(a, zero_tol).nonnegative) {
    fail(ErrorKind::NotNonnegative, "is_irreducible: matrix has negative entries");
  }
  if (a.rows() <= 1) return true;
  const auto fwd = reachable(a, zero_tol, false);
  const auto bwd = reachable(a, zero_tol, true);
  return std::all_of(fwd.begin(), fwd.end(), [](bool b) { return b; }) &&
         std::all_of(bwd.begin(), bwd.end(), [](bool b) { return b; });
}

PerronData perron(const DenseMatrix& a) {
  require_square(a, "perron");
  require_finite(a, "perron");
  if (!is_irreducible(a)) fail(ErrorKind::NotIrreducible, "perron: matrix is reducible");
  const std::size_t n = a.rows();
  const double scale = 1.0 + frobenius_norm(a);
  PerronData out;
  if (n == 1) {
    out.rho = a(0, 0);
    out.x = {1.0};
    return out;
  }

  const Spectrum spec = eigenvalues(a);
  std::vector<double> moduli;
  for (const Complex& z : spec.values) moduli.push_back(std::abs(z));
  std::sort(moduli.begin(), moduli.end(), std::greater<>());
  const bool small_gap = moduli[0] == 0.0 || moduli[1] >= (1.0 - kGapThreshold) * moduli[0];

  std::vector<double> x(n, 1.0 / static_cast<double>(n));
  // One step is enough to detect an already-uniform Perron vector when the
  // gap is too small for the plain power method.
  const bool converged = power_polish(a, 0.0, x, small_gap ? 1 : kPowerBudget);

  if (!converged) {
    const auto dominant = std::max_element(
        spec.values.begin(), spec.values.end(),
        [](const Complex& p, const Complex& q) { return p.real() < q.real(); });
    x = inverse_iteration(a, dominant->real(), scale);
    out.used_fallback = true;
    // Shifting by rho makes A + rho I primitive, so periodic matrices
    // converge too. The nonnegative iteration restores small components to
    // full relative accuracy and lifts roundoff-level negatives.
    double total = 0.0;
    for (double& xi : x) total += (xi = std::max(xi, 0.0));
    if (total > 0.0) {
      for (double& xi : x) xi /= total;
      power_polish(a, std::max(dominant->real(), 0.0), x, kPowerBudget);
    }
  }
  for (double xi : x) {
    if (!(xi > 0.0)) {
      fail(ErrorKind::NonConvergence, "Perron vector has a non-positive entry");
    }
  }
  const std::vector<double> y = matvec(a, x);
  const double rho = std::accumulate(y.begin(), y.end(), 0.0);  // x sums to one
  out.rho = rho;
  out.x = std::move(x);
  out.residual = residual_norm(a, out.x, rho);
  if (!(out.residual <= 1e-10 * scale)) {
    fail(ErrorKind::NonConvergence,
         "Perron residual " + std::to_string(out.residual) + " too large");
  }
  return out;
}

ConstantRowSumForm constant_row_sum_form(const DenseMatrix& a) {
  ConstantRowSumForm out{a, perron(a)};
  const auto& x = out.perron.x;
  const auto [lo, hi] = std::minmax_element(x.begin(), x.end());
  if (*lo == *hi) return out;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      out.matrix(i, j) = a(i, j) * x[j] / x[i];
    }
  }
  return out;
}

DenseMatrix to_constant_row_sums(const DenseMatrix& a) {
  return constant_row_sum_form(a).matrix;
}

double row_sum_spread(const DenseMatrix& a) {
  const auto s = row_sums(a);
  if (s.empty()) return 0.0;
  const auto [lo, hi] = std::minmax_element(s.begin(), s.end());
  return *hi - *lo;
}

}  // namespace spectra
