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

#include "spectra/spectrum.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "spectra/error.hpp"

namespace spectra {

namespace {

// Kuhn's augmenting paths restricted to edges with dist <= limit.
class ThresholdMatcher {
 public:
  ThresholdMatcher(const std::vector<double>& dist, std::size_t n)
      : dist_(dist), n_(n) {}

  bool perfect(double limit, std::vector<std::size_t>* pairing) {
    limit_ = limit;
    match_right_.assign(n_, kNone);
    for (std::size_t i = 0; i < n_; ++i) {
      visited_.assign(n_, false);
      if (!augment(i)) return false;
    }
    if (pairing != nullptr) {
      pairing->assign(n_, kNone);
      for (std::size_t j = 0; j < n_; ++j) (*pairing)[match_right_[j]] = j;
    }
    return true;
  }

 private:
  static constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

  bool augment(std::size_t i) {
    for (std::size_t j = 0; j < n_; ++j) {
      if (visited_[j] || dist_[i * n_ + j] > limit_) continue;
      visited_[j] = true;
      if (match_right_[j] == kNone || augment(match_right_[j])) {
        match_right_[j] = i;
        return true;
      }
    }
    return false;
  }

  const std::vector<double>& dist_;
  std::size_t n_;
  double limit_ = 0.0;
  std::vector<std::size_t> match_right_;
  std::vector<bool> visited_;
};

}  // namespace

Complex Spectrum::sum() const noexcept {
  Complex s = 0.0;
  for (const Complex& z : values) s += z;
  return s;
}

Complex Spectrum::product() const noexcept {
  Complex p = 1.0;
  for (const Complex& z : values) p *= z;
  return p;
}

double Spectrum::max_modulus() const noexcept {
  double m = 0.0;
  for (const Complex& z : values) m = std::max(m, std::abs(z));
  return m;
}

MatchReport match_spectra(const Spectrum& s1, const Spectrum& s2, double tol) {
  const std::size_t n = s1.size();
  if (s2.size() != n) {
    fail(ErrorKind::LengthMismatch, "spectra of sizes " + std::to_string(n) +
                                        " and " + std::to_string(s2.size()));
  }
  MatchReport report;
  if (n == 0) {
    report.matched = true;
    return report;
  }
  std::vector<double> dist(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      dist[i * n + j] = std::abs(s1.values[i] - s2.values[j]);
    }
  }
  std::vector<double> levels = dist;
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());

  // The bottleneck value is one of the pairwise distances; binary search for
  // the smallest level admitting a perfect matching.
  ThresholdMatcher matcher(dist, n);
  std::size_t lo = 0;
  std::size_t hi = levels.size() - 1;
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (matcher.perfect(levels[mid], nullptr)) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  matcher.perfect(levels[lo], &report.pairing);
  report.bottleneck = levels[lo];
  report.matched = report.bottleneck <= tol;
  return report;
}

Spectrum merge(const Spectrum& a, const Spectrum& b) {
  Spectrum out = a;
  out.values.insert(out.values.end(), b.values.begin(), b.values.end());
  return out;
}

Spectrum remove_nearest(const Spectrum& s,
                        const std::vector<Complex>& targets) {
  Spectrum out = s;
  for (const Complex& target : targets) {
    if (out.values.empty()) fail(ErrorKind::LengthMismatch, "remove_nearest");
    const auto it = std::min_element(
        out.values.begin(), out.values.end(),
        [&](const Complex& x, const Complex& y) {
          return std::abs(x - target) < std::abs(y - target);
        });
    out.values.erase(it);
  }
  return out;
}

}  // namespace spectra
