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

#include "spectra/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "spectra/error.hpp"

namespace spectra::io {

using nlohmann::json;

namespace {

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    fail(ErrorKind::ParseError, e.what());
  }
}

double as_number(const json& j, const char* what) {
  if (!j.is_number()) fail(ErrorKind::ParseError, std::string(what) + " must be a number");
  const double x = j.get<double>();
  if (!std::isfinite(x)) fail(ErrorKind::NonFinite, std::string(what) + " is not finite");
  return x;
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    fail(ErrorKind::ParseError, std::string("missing field \"") + key + "\"");
  }
  return j.at(key);
}

json matrix_json(const DenseMatrix& m) {
  return json{{"n", m.rows()}, {"data", m.to_rows()}};
}

DenseMatrix matrix_from_json(const json& j) {
  const json& jn = field(j, "n");
  if (!jn.is_number_integer() || jn.get<long long>() < 1) {
    fail(ErrorKind::ParseError, "\"n\" must be a positive integer");
  }
  const auto n = static_cast<std::size_t>(jn.get<long long>());
  const json& data = field(j, "data");
  if (!data.is_array() || data.size() != n) {
    fail(ErrorKind::ParseError, "\"data\" must hold n rows");
  }
  DenseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!data[i].is_array() || data[i].size() != n) {
      fail(ErrorKind::ParseError, "row " + std::to_string(i) + " must hold n numbers");
    }
    for (std::size_t k = 0; k < n; ++k) m(i, k) = as_number(data[i][k], "matrix entry");
  }
  return m;
}

json spectrum_json(const Spectrum& s) {
  json arr = json::array();
  for (const Complex& z : s.values) arr.push_back({z.real(), z.imag()});
  return arr;
}

Spectrum spectrum_from_json(const json& j) {
  if (!j.is_array()) fail(ErrorKind::ParseError, "spectrum must be an array");
  Spectrum s;
  for (const json& z : j) {
    if (!z.is_array() || z.size() != 2) fail(ErrorKind::ParseError, "eigenvalue must be [re, im]");
    s.values.emplace_back(as_number(z[0], "re"), as_number(z[1], "im"));
  }
  return s;
}

IndexTriple triple_from_json(const json& j) {
  if (!j.is_array() || j.size() != 3) fail(ErrorKind::ParseError, "triple must hold 3 indices");
  IndexTriple t{};
  for (std::size_t m = 0; m < 3; ++m) {
    if (!j[m].is_number_unsigned()) fail(ErrorKind::ParseError, "triple index must be >= 0");
    t[m] = j[m].get<std::size_t>();
  }
  return t;
}

}  // namespace

DenseMatrix parse_matrix(const std::string& text) { return matrix_from_json(parse_json(text)); }

std::string format_matrix(const DenseMatrix& m) { return matrix_json(m).dump(2) + "\n"; }

ConvexPolygon parse_polygon(const std::string& text, bool degenerate_ok) {
  const json j = parse_json(text);
  const json& verts = field(j, "vertices");
  if (!verts.is_array()) fail(ErrorKind::ParseError, "\"vertices\" must be an array");
  std::vector<Point> pts;
  for (const json& p : verts) {
    if (!p.is_array() || p.size() != 2) fail(ErrorKind::ParseError, "vertex must be [x, y]");
    pts.push_back({as_number(p[0], "x"), as_number(p[1], "y")});
  }
  return ConvexPolygon::make(std::move(pts), degenerate_ok);
}

std::string format_polygon(const ConvexPolygon& poly) {
  json verts = json::array();
  for (const Point& p : poly.vertices()) verts.push_back({p.x, p.y});
  return json{{"vertices", verts}}.dump(2) + "\n";
}

CertificateRecord to_record(const Certificate& cert) {
  CertificateRecord r;
  r.input = cert.input;
  r.normalized = cert.normalized;
  r.output = cert.output;
  r.b = cert.plan.b;
  r.c = cert.plan.c;
  r.rho = cert.plan.rho;
  r.t = cert.t;
  r.t_tilde = cert.t_tilde;
  r.threshold = cert.threshold;
  r.gamma_n = cert.gamma_n;
  r.spectrum_before = cert.spectrum_before;
  r.spectrum_after = cert.spectrum_after;
  r.spectral_deviation = cert.spectral_deviation;
  r.nonneg_margin = cert.nonneg_margin;
  r.max_det = cert.plan.max_det;
  r.triple = cert.plan.triple;
  r.minimizers = cert.plan.minimizers;
  r.alpha_sum = cert.plan.alpha_sum;
  r.delta = cert.plan.delta;
  r.z = cert.plan.z;
  return r;
}

std::string format_certificate(const CertificateRecord& r) {
  json plan = {{"Delta", r.max_det},     {"triple", r.triple}, {"minimizers", r.minimizers},
               {"alpha_sum", r.alpha_sum}, {"delta", r.delta},   {"z", r.z}};
  json j = {{"input", matrix_json(r.input)},
            {"normalized", matrix_json(r.normalized)},
            {"output", matrix_json(r.output)},
            {"b", r.b},
            {"c", r.c},
            {"rho", r.rho},
            {"t", r.t},
            {"t_tilde", r.t_tilde},
            {"threshold", r.threshold},
            {"gamma_n", r.gamma_n},
            {"spectrum_before", spectrum_json(r.spectrum_before)},
            {"spectrum_after", spectrum_json(r.spectrum_after)},
            {"spectral_deviation", r.spectral_deviation},
            {"nonneg_margin", r.nonneg_margin},
            {"plan", plan}};
  return j.dump(2) + "\n";
}

CertificateRecord parse_certificate(const std::string& text) {
  const json j = parse_json(text);
  CertificateRecord r;
  r.input = matrix_from_json(field(j, "input"));
  r.normalized = matrix_from_json(field(j, "normalized"));
  r.output = matrix_from_json(field(j, "output"));
  r.b = as_number(field(j, "b"), "b");
  r.c = as_number(field(j, "c"), "c");
  r.rho = as_number(field(j, "rho"), "rho");
  r.t = as_number(field(j, "t"), "t");
  r.t_tilde = as_number(field(j, "t_tilde"), "t_tilde");
  r.threshold = as_number(field(j, "threshold"), "threshold");
  r.gamma_n = as_number(field(j, "gamma_n"), "gamma_n");
  r.spectrum_before = spectrum_from_json(field(j, "spectrum_before"));
  r.spectrum_after = spectrum_from_json(field(j, "spectrum_after"));
  r.spectral_deviation = as_number(field(j, "spectral_deviation"), "spectral_deviation");
  r.nonneg_margin = as_number(field(j, "nonneg_margin"), "nonneg_margin");
  const json& plan = field(j, "plan");
  r.max_det = as_number(field(plan, "Delta"), "Delta");
  r.triple = triple_from_json(field(plan, "triple"));
  r.minimizers = triple_from_json(field(plan, "minimizers"));
  r.alpha_sum = as_number(field(plan, "alpha_sum"), "alpha_sum");
  r.delta = as_number(field(plan, "delta"), "delta");
  const json& z = field(plan, "z");
  if (!z.is_array()) fail(ErrorKind::ParseError, "\"z\" must be an array");
  for (const json& zi : z) r.z.push_back(as_number(zi, "z entry"));
  return r;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::ParseError, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) fail(ErrorKind::InvalidArgument, "cannot write " + path.string());
  out << contents;
  if (!out) fail(ErrorKind::InvalidArgument, "write failed for " + path.string());
}

}  // namespace spectra::io
