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

#include <atomic>
#include <cstdlib>
#include <string>

#include "spectra/error.hpp"
#include "spectra/kernels.hpp"

namespace spectra::kernels {

namespace {

Isa initial_isa() noexcept {
  const Isa best = detected_isa();
  if (const char* env = std::getenv("SPECTRA_ISA")) {
    const std::string_view want(env);
    if (want == "scalar") return Isa::Scalar;
    if (want == "avx2" && best == Isa::Avx2) return Isa::Avx2;
  }
  return best;
}

std::atomic<Isa>& current() noexcept {
  static std::atomic<Isa> isa{initial_isa()};
  return isa;
}

void require_same_length(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    fail(ErrorKind::LengthMismatch, std::string(what) + ": " +
                                        std::to_string(a) +
                                        " != " + std::to_string(b));
  }
}

}  // namespace

std::string_view to_string(Isa isa) noexcept {
  return isa == Isa::Avx2 ? "avx2" : "scalar";
}

Isa detected_isa() noexcept {
  return avx2::supported() ? Isa::Avx2 : Isa::Scalar;
}

Isa active_isa() noexcept { return current().load(std::memory_order_relaxed); }

void set_isa(Isa isa) {
  if (isa == Isa::Avx2 && !avx2::supported()) {
    fail(ErrorKind::InvalidArgument, "AVX2 is not supported on this CPU");
  }
  current().store(isa, std::memory_order_relaxed);
}

double dot(std::span<const double> a, std::span<const double> b) {
  require_same_length(a.size(), b.size(), "dot");
  return active_isa() == Isa::Avx2 ? avx2::dot(a.data(), b.data(), a.size())
                                   : scalar::dot(a.data(), b.data(), a.size());
}

void axpy(double alpha, std::span<const double> x, std::span<double> y) {
  require_same_length(x.size(), y.size(), "axpy");
  if (active_isa() == Isa::Avx2) {
    avx2::axpy(alpha, x.data(), y.data(), x.size());
  } else {
    scalar::axpy(alpha, x.data(), y.data(), x.size());
  }
}

void gemv(std::span<const double> a, std::size_t rows, std::size_t cols,
          std::span<const double> x, std::span<double> y) {
  require_same_length(a.size(), rows * cols, "gemv matrix");
  require_same_length(x.size(), cols, "gemv x");
  require_same_length(y.size(), rows, "gemv y");
  if (active_isa() == Isa::Avx2) {
    avx2::gemv(a.data(), rows, cols, x.data(), y.data());
  } else {
    scalar::gemv(a.data(), rows, cols, x.data(), y.data());
  }
}

double max_abs_cross(double ox, double oy, double dx, double dy,
                     std::span<const double> xs, std::span<const double> ys) {
  require_same_length(xs.size(), ys.size(), "max_abs_cross");
  return active_isa() == Isa::Avx2
             ? avx2::max_abs_cross(ox, oy, dx, dy, xs.data(), ys.data(),
                                   xs.size())
             : scalar::max_abs_cross(ox, oy, dx, dy, xs.data(), ys.data(),
                                     xs.size());
}

}  // namespace spectra::kernels
