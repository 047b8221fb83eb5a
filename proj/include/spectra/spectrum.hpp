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

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

namespace spectra {

using Complex = std::complex<double>;

/// Unordered multiset of eigenvalues.
struct Spectrum {
  std::vector<Complex> values;

  Spectrum() = default;
  explicit Spectrum(std::vector<Complex> v) : values(std::move(v)) {}
  Spectrum(std::initializer_list<Complex> v) : values(v) {}

  std::size_t size() const noexcept { return values.size(); }
  Complex sum() const noexcept;
  Complex product() const noexcept;
  double max_modulus() const noexcept;
  friend bool operator==(const Spectrum&, const Spectrum&) = default;
};

struct MatchReport {
  bool matched = false;
  /// Smallest achievable value of the largest paired distance.
  double bottleneck = 0.0;
  /// pairing[i] is the index in the second spectrum paired with value i of
  /// the first.
  std::vector<std::size_t> pairing;
};

/// Bottleneck assignment between the two multisets: finds the bijection
/// minimizing the largest pairwise distance. `matched` is true iff that
/// distance is <= tol, so the answer does not depend on the order of either
/// list. Throws Error(LengthMismatch) if the sizes differ.
MatchReport match_spectra(const Spectrum& s1, const Spectrum& s2, double tol);

inline bool spectrum_match(const Spectrum& s1, const Spectrum& s2, double tol) {
  return match_spectra(s1, s2, tol).matched;
}

/// Multiset union.
Spectrum merge(const Spectrum& a, const Spectrum& b);

/// Removes the value closest to each of `targets` (one removal per target).
Spectrum remove_nearest(const Spectrum& s, const std::vector<Complex>& targets);

}  // namespace spectra
