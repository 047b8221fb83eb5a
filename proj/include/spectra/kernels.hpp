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

// Data-parallel inner loops shared by the matrix and polygon code.
//
// Each kernel has a portable scalar reference in `kernels::scalar` and a
// vectorized variant in `kernels::avx2`. The unqualified entry points
// dispatch at runtime to the widest variant the CPU supports; the choice can
// be pinned with set_isa() or the SPECTRA_ISA environment variable
// ("scalar" or "avx2").
//
// Elementwise kernels (axpy, max_abs_cross) are bit-identical across
// variants. Reductions (dot, gemv) reassociate the sum and agree with the
// scalar reference to within n * eps * sum|a_i b_i|.

#include <cstddef>
#include <span>
#include <string_view>

namespace spectra::kernels {

enum class Isa { Scalar, Avx2 };

std::string_view to_string(Isa isa) noexcept;

/// Widest instruction set usable on this CPU.
Isa detected_isa() noexcept;

/// Instruction set the dispatching entry points currently use.
Isa active_isa() noexcept;

/// Pins dispatch to `isa`. Throws Error(InvalidArgument) if the CPU lacks it.
void set_isa(Isa isa);

double dot(std::span<const double> a, std::span<const double> b);

/// y += alpha * x
void axpy(double alpha, std::span<const double> x, std::span<double> y);

/// y = A x for a row-major rows x cols block.
void gemv(std::span<const double> a, std::size_t rows, std::size_t cols,
          std::span<const double> x, std::span<double> y);

/// max_k |dx * (ys[k] - oy) - dy * (xs[k] - ox)|, i.e. the largest doubled
/// triangle area spanned by the edge (o, o + d) and one of the points.
/// Returns 0 for empty input.
double max_abs_cross(double ox, double oy, double dx, double dy,
                     std::span<const double> xs, std::span<const double> ys);

namespace scalar {
double dot(const double* a, const double* b, std::size_t n) noexcept;
void axpy(double alpha, const double* x, double* y, std::size_t n) noexcept;
void gemv(const double* a, std::size_t rows, std::size_t cols, const double* x,
          double* y) noexcept;
double max_abs_cross(double ox, double oy, double dx, double dy,
                     const double* xs, const double* ys,
                     std::size_t n) noexcept;
}  // namespace scalar

namespace avx2 {
bool supported() noexcept;
double dot(const double* a, const double* b, std::size_t n) noexcept;
void axpy(double alpha, const double* x, double* y, std::size_t n) noexcept;
void gemv(const double* a, std::size_t rows, std::size_t cols, const double* x,
          double* y) noexcept;
double max_abs_cross(double ox, double oy, double dx, double dy,
                     const double* xs, const double* ys,
                     std::size_t n) noexcept;
}  // namespace avx2

}  // namespace spectra::kernels
