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

#include "spectra/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <random>
#include <string>

#include "spectra/error.hpp"
#include "spectra/linalg.hpp"

namespace spectra {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// Diagonal similarity with powers of two so that row and column norms are
// comparable (exact in floating point, eigenvalues unchanged).
void balance(DenseMatrix& a) {
  constexpr double kRadix = 2.0;
  constexpr double kRadix2 = kRadix * kRadix;
  const std::size_t n = a.rows();
  bool done = false;
  while (!done) {
    done = true;
    for (std::size_t i = 0; i < n; ++i) {
      double r = 0.0, c = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i) continue;
        c += std::fabs(a(j, i));
        r += std::fabs(a(i, j));
      }
      if (c == 0.0 || r == 0.0) continue;
      double g = r / kRadix;
      double f = 1.0;
      const double s = c + r;
      while (c < g) {
        f *= kRadix;
        c *= kRadix2;
      }
      g = r * kRadix;
      while (c > g) {
        f /= kRadix;
        c /= kRadix2;
      }
      if ((c + r) / f < 0.95 * s) {
        done = false;
        g = 1.0 / f;
        for (std::size_t j = 0; j < n; ++j) a(i, j) *= g;
        for (std::size_t j = 0; j < n; ++j) a(j, i) *= f;
      }
    }
  }
}

void reduce_to_hessenberg(DenseMatrix& a) {
  const std::size_t n = a.rows();
  std::vector<double> v(n);
  for (std::size_t k = 0; k + 2 < n; ++k) {
    const std::size_t m = n - k - 1;
    double norm = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      v[i] = a(k + 1 + i, k);
      norm += v[i] * v[i];
    }
    norm = std::sqrt(norm);
    if (norm == 0.0) continue;
    const double alpha = v[0] > 0.0 ? -norm : norm;
    v[0] -= alpha;
    double vnorm = 0.0;
    for (std::size_t i = 0; i < m; ++i) vnorm += v[i] * v[i];
    vnorm = std::sqrt(vnorm);
    if (vnorm == 0.0) continue;
    for (std::size_t i = 0; i < m; ++i) v[i] /= vnorm;

    // H = I - 2 v v^T acting on rows/cols k+1..n-1.
    for (std::size_t j = k; j < n; ++j) {
      double s = 0.0;
      for (std::size_t i = 0; i < m; ++i) s += v[i] * a(k + 1 + i, j);
      s *= 2.0;
      for (std::size_t i = 0; i < m; ++i) a(k + 1 + i, j) -= s * v[i];
    }
    for (std::size_t i = 0; i < n; ++i) {
      double s = 0.0;
      for (std::size_t j = 0; j < m; ++j) s += a(i, k + 1 + j) * v[j];
      s *= 2.0;
      for (std::size_t j = 0; j < m; ++j) a(i, k + 1 + j) -= s * v[j];
    }
    a(k + 1, k) = alpha;
    for (std::size_t i = k + 2; i < n; ++i) a(i, k) = 0.0;
  }
}

double sign_of(double a, double b) { return b >= 0.0 ? std::fabs(a) : -std::fabs(a); }

// Francis double-shift QR on an upper Hessenberg matrix. Indices inside are
// 1-based to keep the classic bulge-chasing recurrences readable; h(i, j)
// maps to a(i-1, j-1).
std::vector<Complex> hessenberg_qr(DenseMatrix& a) {
  const int n = static_cast<int>(a.rows());
  auto h = [&a](int i, int j) -> double& { return a(i - 1, j - 1); };
  std::vector<double> wr(n + 1, 0.0), wi(n + 1, 0.0);

  double anorm = 0.0;
  for (int i = 1; i <= n; ++i) {
    for (int j = std::max(i - 1, 1); j <= n; ++j) anorm += std::fabs(h(i, j));
  }

  const int budget = 100 * n;
  int total = 0;
  int nn = n;
  double shift = 0.0;
  while (nn >= 1) {
    int its = 0;
    int l = 0;
    do {
      for (l = nn; l >= 2; --l) {
        double s = std::fabs(h(l - 1, l - 1)) + std::fabs(h(l, l));
        if (s == 0.0) s = anorm;
        if (std::fabs(h(l, l - 1)) + s == s) {
          h(l, l - 1) = 0.0;
          break;
        }
      }
      double x = h(nn, nn);
      if (l == nn) {
        wr[nn] = x + shift;
        wi[nn--] = 0.0;
      } else {
        double y = h(nn - 1, nn - 1);
        double w = h(nn, nn - 1) * h(nn - 1, nn);
        if (l == nn - 1) {
          const double p = 0.5 * (y - x);
          const double q = p * p + w;
          double z = std::sqrt(std::fabs(q));
          x += shift;
          if (q >= 0.0) {
            z = p + sign_of(z, p);
            wr[nn - 1] = wr[nn] = x + z;
            if (z != 0.0) wr[nn] = x - w / z;
            wi[nn - 1] = wi[nn] = 0.0;
          } else {
            wr[nn - 1] = wr[nn] = x + p;
            wi[nn - 1] = -(wi[nn] = z);
          }
          nn -= 2;
        } else {
          if (++total > budget) {
            fail(ErrorKind::NonConvergence,
                 "QR iteration budget of " + std::to_string(budget) +
                     " sweeps exhausted");
          }
          if (its > 0 && its % 10 == 0) {
            // Exceptional shift.
            shift += x;
            for (int i = 1; i <= nn; ++i) h(i, i) -= x;
            const double s = std::fabs(h(nn, nn - 1)) + std::fabs(h(nn - 1, nn - 2));
            y = x = 0.75 * s;
            w = -0.4375 * s * s;
          }
          ++its;
          int m = nn - 2;
          double p = 0.0, q = 0.0, r = 0.0, z = 0.0;
          for (; m >= l; --m) {
            z = h(m, m);
            r = x - z;
            double s = y - z;
            p = (r * s - w) / h(m + 1, m) + h(m, m + 1);
            q = h(m + 1, m + 1) - z - r - s;
            r = h(m + 2, m + 1);
            s = std::fabs(p) + std::fabs(q) + std::fabs(r);
            p /= s;
            q /= s;
            r /= s;
            if (m == l) break;
            const double u = std::fabs(h(m, m - 1)) * (std::fabs(q) + std::fabs(r));
            const double v = std::fabs(p) * (std::fabs(h(m - 1, m - 1)) + std::fabs(z) +
                                             std::fabs(h(m + 1, m + 1)));
            if (u + v == v) break;
          }
          for (int i = m + 2; i <= nn; ++i) {
            h(i, i - 2) = 0.0;
            if (i != m + 2) h(i, i - 3) = 0.0;
          }
          for (int k = m; k <= nn - 1; ++k) {
            if (k != m) {
              p = h(k, k - 1);
              q = h(k + 1, k - 1);
              r = 0.0;
              if (k != nn - 1) r = h(k + 2, k - 1);
              if ((x = std::fabs(p) + std::fabs(q) + std::fabs(r)) != 0.0) {
                p /= x;
                q /= x;
                r /= x;
              }
            }
            const double s = sign_of(std::sqrt(p * p + q * q + r * r), p);
            if (s == 0.0) continue;
            if (k == m) {
              if (l != m) h(k, k - 1) = -h(k, k - 1);
            } else {
              h(k, k - 1) = -s * x;
            }
            p += s;
            x = p / s;
            y = q / s;
            z = r / s;
            q /= p;
            r /= p;
            for (int j = k; j <= nn; ++j) {
              p = h(k, j) + q * h(k + 1, j);
              if (k != nn - 1) {
                p += r * h(k + 2, j);
                h(k + 2, j) -= p * z;
              }
              h(k + 1, j) -= p * y;
              h(k, j) -= p * x;
            }
            const int mmin = nn < k + 3 ? nn : k + 3;
            for (int i = l; i <= mmin; ++i) {
              p = x * h(i, k) + y * h(i, k + 1);
              if (k != nn - 1) {
                p += z * h(i, k + 2);
                h(i, k + 2) -= p * r;
              }
              h(i, k + 1) -= p * q;
              h(i, k) -= p;
            }
          }
        }
      }
    } while (l < nn - 1);
  }

  std::vector<Complex> out;
  out.reserve(n);
  for (int i = 1; i <= n; ++i) out.emplace_back(wr[i], wi[i]);
  return out;
}

using CVec = std::vector<Complex>;

// LU with partial pivoting of A - lambda I; exactly-zero pivots are nudged
// to eps * scale so inverse iteration at an exact eigenvalue still works.
class ShiftedLu {
 public:
  ShiftedLu(const DenseMatrix& a, Complex lambda, double scale)
      : n_(a.rows()), lu_(n_ * n_), pivot_(n_) {
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) at(i, j) = a(i, j);
      at(i, i) -= lambda;
    }
    const double tiny = kEps * scale;
    for (std::size_t k = 0; k < n_; ++k) {
      std::size_t p = k;
      for (std::size_t i = k + 1; i < n_; ++i) {
        if (std::abs(at(i, k)) > std::abs(at(p, k))) p = i;
      }
      pivot_[k] = p;
      if (p != k) {
        for (std::size_t j = 0; j < n_; ++j) std::swap(at(k, j), at(p, j));
      }
      if (std::abs(at(k, k)) < tiny) at(k, k) = tiny;
      for (std::size_t i = k + 1; i < n_; ++i) {
        const Complex l = at(i, k) / at(k, k);
        at(i, k) = l;
        for (std::size_t j = k + 1; j < n_; ++j) at(i, j) -= l * at(k, j);
      }
    }
  }

  CVec solve(CVec x) const {
    for (std::size_t k = 0; k < n_; ++k) std::swap(x[k], x[pivot_[k]]);
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < i; ++j) x[i] -= at(i, j) * x[j];
    }
    for (std::size_t i = n_; i-- > 0;) {
      for (std::size_t j = i + 1; j < n_; ++j) x[i] -= at(i, j) * x[j];
      x[i] /= at(i, i);
    }
    return x;
  }

 private:
  Complex& at(std::size_t i, std::size_t j) { return lu_[i * n_ + j]; }
  const Complex& at(std::size_t i, std::size_t j) const { return lu_[i * n_ + j]; }

  std::size_t n_;
  CVec lu_;
  std::vector<std::size_t> pivot_;
};

double norm2(const CVec& w) {
  double s = 0.0;
  for (const Complex& z : w) s += std::norm(z);
  return std::sqrt(s);
}

double residual_of(const DenseMatrix& a, const CVec& w, Complex lambda) {
  const std::size_t n = a.rows();
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    Complex r = -lambda * w[i];
    for (std::size_t j = 0; j < n; ++j) r += a(i, j) * w[j];
    s += std::norm(r);
  }
  return std::sqrt(s);
}

CVec inverse_iteration(const ShiftedLu& lu, CVec w) {
  for (int it = 0; it < 4; ++it) {
    w = lu.solve(std::move(w));
    const double nrm = norm2(w);
    if (nrm == 0.0 || !std::isfinite(nrm)) break;
    for (Complex& z : w) z /= nrm;
  }
  return w;
}

}  // namespace

Spectrum eigenvalues(const DenseMatrix& a) {
  require_square(a, "eigenvalues");
  require_finite(a, "eigenvalues");
  if (a.rows() == 0) fail(ErrorKind::InvalidArgument, "eigenvalues: empty matrix");
  DenseMatrix h = a;
  balance(h);
  reduce_to_hessenberg(h);
  Spectrum s(hessenberg_qr(h));
  std::sort(s.values.begin(), s.values.end(), [](const Complex& x, const Complex& y) {
    if (x.real() != y.real()) return x.real() > y.real();
    return x.imag() > y.imag();
  });
  return s;
}

PairVectors real_pair_eigenvectors(const DenseMatrix& a, double b, double c) {
  require_square(a, "real_pair_eigenvectors");
  require_finite(a, "real_pair_eigenvectors");
  if (c == 0.0) fail(ErrorKind::DegeneratePair, "imaginary part c must be nonzero");
  const std::size_t n = a.rows();
  const double scale = 1.0 + frobenius_norm(a);
  const Complex lambda(b, c);
  const ShiftedLu lu(a, lambda, scale);

  CVec start(n);
  for (std::size_t k = 0; k < n; ++k) {
    start[k] = Complex(1.0, static_cast<double>(k + 1) / static_cast<double>(n + 1));
  }
  CVec best = inverse_iteration(lu, start);
  double best_res = residual_of(a, best, lambda);
  const double tol = 1e-8 * scale;

  auto rank_deficient = [](const CVec& w) {
    DenseMatrix uv(w.size(), 2);
    for (std::size_t i = 0; i < w.size(); ++i) {
      uv(i, 0) = w[i].real();
      uv(i, 1) = w[i].imag();
    }
    const auto sv = singular_values(uv);
    return !(sv[1] > 1e-8 * sv[0]);
  };

  if (!(best_res <= tol) || rank_deficient(best)) {
    std::mt19937_64 rng(0x5eedULL + n);
    std::uniform_real_distribution<double> unif(-1.0, 1.0);
    for (Complex& z : start) z = Complex(unif(rng), unif(rng));
    CVec retry = inverse_iteration(lu, start);
    const double retry_res = residual_of(a, retry, lambda);
    if (retry_res < best_res || (best_res <= tol && rank_deficient(best))) {
      best = std::move(retry);
      best_res = retry_res;
    }
  }
  if (!(best_res <= tol)) {
    fail(ErrorKind::NotAnEigenvalue,
         "residual " + std::to_string(best_res) + " exceeds " + std::to_string(tol) +
             " for " + std::to_string(b) + (c < 0 ? "-" : "+") +
             std::to_string(std::fabs(c)) + "i");
  }

  // Fix the free complex phase: largest component real and positive.
  std::size_t top = 0;
  for (std::size_t i = 1; i < n; ++i) {
    if (std::abs(best[i]) > std::abs(best[top])) top = i;
  }
  const Complex phase = std::conj(best[top]) / std::abs(best[top]);
  const double nrm = norm2(best);
  for (Complex& z : best) z *= phase / nrm;
  if (rank_deficient(best)) {
    fail(ErrorKind::DefectivePair, "real and imaginary parts are collinear");
  }

  PairVectors out;
  out.u.resize(n);
  out.v.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.u[i] = best[i].real();
    out.v[i] = best[i].imag();
  }
  out.residual = residual_of(a, best, lambda);
  return out;
}

std::vector<double> shifted_singular_values(const DenseMatrix& a, double b, double c) {
  require_square(a, "shifted_singular_values");
  DenseMatrix re = a;
  for (std::size_t i = 0; i < a.rows(); ++i) re(i, i) -= b;
  DenseMatrix im(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) im(i, i) = -c;
  return singular_values(re, im);
}

}  // namespace spectra
