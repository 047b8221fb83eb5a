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

// JSON formats shared by the command-line tool and tests.
//
//   matrix:      {"n": 3, "data": [[...], [...], [...]]}
//   polygon:     {"vertices": [[x, y], ...]}            (counterclockwise)
//   certificate: see CertificateRecord
//
// Doubles are written in shortest round-trip form, so reading a file back
// reproduces every value bit for bit.

#include <filesystem>
#include <string>
#include <vector>

#include "spectra/matrix.hpp"
#include "spectra/perturb.hpp"
#include "spectra/polygeom.hpp"
#include "spectra/spectrum.hpp"

namespace spectra::io {

/// Throws Error(ParseError) on malformed input, Error(NonFinite).
DenseMatrix parse_matrix(const std::string& text);
std::string format_matrix(const DenseMatrix& m);

ConvexPolygon parse_polygon(const std::string& text, bool degenerate_ok = false);
std::string format_polygon(const ConvexPolygon& poly);

/// Flat, serializable view of a Certificate.
struct CertificateRecord {
  DenseMatrix input;
  DenseMatrix normalized;
  DenseMatrix output;
  double b = 0.0;
  double c = 0.0;
  double rho = 0.0;
  double t = 0.0;
  double t_tilde = 0.0;
  double threshold = 0.0;
  double gamma_n = 0.0;
  Spectrum spectrum_before;
  Spectrum spectrum_after;
  double spectral_deviation = 0.0;
  double nonneg_margin = 0.0;
  // plan summary
  double max_det = 0.0;
  IndexTriple triple{};
  IndexTriple minimizers{};
  double alpha_sum = 0.0;
  double delta = 0.0;
  std::vector<double> z;

  friend bool operator==(const CertificateRecord&, const CertificateRecord&) = default;
};

CertificateRecord to_record(const Certificate& cert);
CertificateRecord parse_certificate(const std::string& text);
std::string format_certificate(const CertificateRecord& rec);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const std::string& contents);

}  // namespace spectra::io
