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

#include "commands.hpp"

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <optional>
#include <random>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "spectra/eigen.hpp"
#include "spectra/error.hpp"
#include "spectra/io.hpp"
#include "spectra/nonneg.hpp"
#include "spectra/perturb.hpp"
#include "spectra/polygeom.hpp"

namespace spectra::cli {

namespace {

constexpr double kGeometrySlack = 1e-9;

std::string num(double x, int digits = 12) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  return buf;
}

std::string complex_str(const Complex& z) {
  const double im = z.imag();
  return num(z.real()) + (std::signbit(im) ? " - " : " + ") + num(std::fabs(im)) + "i";
}

std::string triple_str(const IndexTriple& t) {
  return std::to_string(t[0]) + " " + std::to_string(t[1]) + " " + std::to_string(t[2]);
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("SPECTRA_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      fail(ErrorKind::InvalidArgument, "SPECTRA_SEED must be an unsigned integer");
    }
  }
  return 0;
}

struct PerturbArgs {
  std::string matrix;
  double b = 0.0;
  double c = 0.0;
  double t = 0.0;
  std::optional<double> t_tilde;
  double tol = 1e-9;
  std::optional<double> match_tol;
  std::string out;
};

int cmd_perturb(const PerturbArgs& args, std::ostream& out) {
  const DenseMatrix a = io::parse_matrix(io::read_file(args.matrix));
  const int n = static_cast<int>(a.rows());
  // Structural failures are reported before the default shift needs gamma(n).
  if (!is_nonnegative(a).nonnegative) fail(ErrorKind::NotNonnegative, "input has negative entries");
  if (!is_irreducible(a)) fail(ErrorKind::NotIrreducible, "input matrix is reducible");
  const double t_tilde = args.t_tilde.value_or(gamma(n) * args.t);
  ShiftOptions opts;
  opts.tol = args.tol;
  if (args.match_tol) opts.match_tol = *args.match_tol;
  const Certificate cert = shift_complex_pair(a, args.b, args.c, args.t, t_tilde, opts);
  io::write_file(args.out, io::format_certificate(io::to_record(cert)));

  out << "n: " << n << "\n"
      << "pair: " << complex_str({cert.plan.b, cert.plan.c}) << "\n"
      << "rho: " << num(cert.plan.rho) << "\n"
      << "t: " << num(cert.t) << "\n"
      << "t_tilde: " << num(cert.t_tilde) << "\n"
      << "gamma_n: " << num(cert.gamma_n) << "\n"
      << "threshold: " << num(cert.threshold) << "\n"
      << "alpha_sum: " << num(cert.plan.alpha_sum) << "\n"
      << "nonneg_margin: " << num(cert.nonneg_margin) << "\n"
      << "spectral_deviation: " << num(cert.spectral_deviation) << "\n"
      << "spectrum_after:\n";
  for (const Complex& z : cert.spectrum_after.values) out << "  " << complex_str(z) << "\n";
  out << "status: verified\n";
  return kOk;
}

int cmd_check(const std::string& path, std::ostream& out) {
  const DenseMatrix a = io::parse_matrix(io::read_file(path));
  const NonnegCheck nn = is_nonnegative(a);
  out << "n: " << a.rows() << "\n"
      << "nonneg_margin: " << num(nn.margin) << "\n"
      << "nonnegative: " << (nn.nonnegative ? "true" : "false") << "\n";
  const bool irreducible = nn.nonnegative && is_irreducible(a);
  out << "irreducible: " << (irreducible ? "true" : "false") << "\n";
  if (irreducible) {
    const ConstantRowSumForm form = constant_row_sum_form(a);
    out << "rho: " << num(form.perron.rho) << "\n"
        << "perron_residual: " << num(form.perron.residual) << "\n"
        << "perron_vector:";
    for (double x : form.perron.x) out << " " << num(x);
    out << "\n"
        << "row_sum_residual: " << num(row_sum_spread(form.matrix)) << "\n";
  }
  out << "spectrum:\n";
  for (const Complex& z : eigenvalues(a).values) out << "  " << complex_str(z) << "\n";
  return kOk;
}

int cmd_geometry_ratio(const std::string& polygon_path, const std::string& fixture,
                       bool degenerate_ok, std::ostream& out) {
  std::optional<ConvexPolygon> poly;
  if (!polygon_path.empty()) {
    poly = io::parse_polygon(io::read_file(polygon_path), degenerate_ok);
  } else if (fixture == "pentagon") {
    poly = extremal_pentagon();
  } else if (fixture == "hexagon") {
    poly = extremal_hexagon();
  } else if (fixture == "square") {
    poly = unit_square();
  } else {
    fail(ErrorKind::InvalidArgument, "give --polygon FILE or --fixture {pentagon,hexagon,square}");
  }
  const RatioReport r = triangle_ratio(*poly);
  const int n = static_cast<int>(poly->effective_size());
  const double g = gamma(n);
  out << "n: " << n << "\n"
      << "polygon_double_area: " << num(r.polygon_double_area, 17) << "\n"
      << "best_triple: " << triple_str(r.best_triple) << "\n"
      << "triangle_double_area: " << num(r.triangle_double_area, 17) << "\n"
      << "ratio: " << num(r.ratio, 17) << "\n"
      << "gamma_n: " << num(g, 17) << "\n";
  if (n > 6) {
    out << "status: unbounded (gamma_n bounds polygons only for n <= 6)\n";
    return kOk;
  }
  if (r.ratio > g + kGeometrySlack) {
    out << "status: exceeds\n";
    return kVerificationFailed;
  }
  out << "status: " << (std::fabs(r.ratio - g) <= kGeometrySlack ? "tight" : "within") << "\n";
  return kOk;
}

struct SearchArgs {
  int n = 6;
  int restarts = 50;
  int iters = 2000;
  std::optional<std::uint64_t> seed;
  std::string trace;
  std::string out;
};

int cmd_geometry_search(const SearchArgs& args, std::ostream& out) {
  const std::uint64_t seed = args.seed.value_or(default_seed());
  const SearchResult res =
      search_max_ratio(static_cast<std::size_t>(args.n), args.restarts, args.iters, seed);
  if (!args.trace.empty()) {
    std::ostringstream csv;
    csv << "iteration,ratio\n";
    for (const TracePoint& p : res.trace) csv << p.iteration << "," << num(p.ratio, 17) << "\n";
    io::write_file(args.trace, csv.str());
  }
  if (!args.out.empty()) io::write_file(args.out, io::format_polygon(res.best_polygon));
  const double g = gamma(args.n);
  out << "n: " << args.n << "\n"
      << "seed: " << seed << "\n"
      << "best_ratio: " << num(res.best_ratio, 17) << "\n"
      << "gamma_n: " << num(g, 17) << "\n"
      << "gap: " << num(g - res.best_ratio) << "\n"
      << "vertices:\n";
  for (const Point& p : res.best_polygon.vertices()) {
    out << "  " << num(p.x, 17) << " " << num(p.y, 17) << "\n";
  }
  if (args.n <= 6 && res.best_ratio > g + kGeometrySlack) {
    out << "status: exceeds\n";
    return kVerificationFailed;
  }
  out << "status: ok\n";
  return kOk;
}

struct ScanArgs {
  std::string matrix;
  double b = 0.0;
  double c = 0.0;
  int samples = 100;
  std::optional<std::uint64_t> seed;
  std::string out;
};

// Random positive diagonal similarities D^{-1} A D keep the spectrum; the
// plan is rebuilt from each rescaled matrix's constant-row-sum form.
int cmd_threshold_scan(const ScanArgs& args, std::ostream& out) {
  const DenseMatrix a = io::parse_matrix(io::read_file(args.matrix));
  if (!is_nonnegative(a).nonnegative) fail(ErrorKind::NotNonnegative, "input has negative entries");
  if (!is_irreducible(a)) fail(ErrorKind::NotIrreducible, "input matrix is reducible");
  if (args.samples < 1) fail(ErrorKind::InvalidArgument, "--samples must be >= 1");
  const std::size_t n = a.rows();
  const double g = gamma(static_cast<int>(n));
  std::mt19937_64 rng(args.seed.value_or(default_seed()));
  std::uniform_real_distribution<double> log_scale(-std::log(10.0), std::log(10.0));

  std::ostringstream csv;
  csv << "sample,alpha_sum,threshold_per_t,Delta\n";
  double lo = 0.0, hi = 0.0;
  int violations = 0;
  for (int k = 0; k < args.samples; ++k) {
    std::vector<double> d(n, 1.0);
    if (k > 0) {
      for (double& di : d) di = std::exp(log_scale(rng));
    }
    DenseMatrix scaled_a(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) scaled_a(i, j) = a(i, j) * d[j] / d[i];
    }
    const PerturbPlan plan = build_plan(to_constant_row_sums(scaled_a), args.b, args.c, 1.0, g);
    if (k == 0 || plan.alpha_sum < lo) lo = plan.alpha_sum;
    if (k == 0 || plan.alpha_sum > hi) hi = plan.alpha_sum;
    if (plan.alpha_sum < -g - kGeometrySlack || plan.alpha_sum > -1.0 + kGeometrySlack) {
      ++violations;
    }
    csv << k << "," << num(plan.alpha_sum, 17) << "," << num(construction_threshold(plan), 17)
        << "," << num(plan.max_det, 17) << "\n";
  }
  io::write_file(args.out, csv.str());
  out << "n: " << n << "\n"
      << "samples: " << args.samples << "\n"
      << "alpha_sum_min: " << num(lo) << "\n"
      << "alpha_sum_max: " << num(hi) << "\n"
      << "interval: [" << num(-g) << ", -1]\n"
      << "violations: " << violations << "\n";
  return violations == 0 ? kOk : kVerificationFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Eigenvalue-pair shifts for nonnegative matrices and inscribed-triangle ratios",
               "spectra"};
  app.require_subcommand(1);

  PerturbArgs perturb;
  auto* sub_perturb = app.add_subcommand(
      "perturb", "shift the pair b +- ic by t and the Perron root by t-tilde; write a certificate");
  sub_perturb->add_option("--matrix", perturb.matrix, "matrix JSON file")->required();
  sub_perturb->add_option("--b", perturb.b, "real part of the pair")->required();
  sub_perturb->add_option("--c", perturb.c, "imaginary part of the pair")->required();
  sub_perturb->add_option("--t", perturb.t, "shift of the pair")->required();
  sub_perturb->add_option("--t-tilde", perturb.t_tilde, "shift of the Perron root (default gamma_n t)");
  sub_perturb->add_option("--tol", perturb.tol, "nonnegativity / threshold slack");
  sub_perturb->add_option("--match-tol", perturb.match_tol,
                          "spectral match tolerance (default 1e-8 (1 + |A|))");
  sub_perturb->add_option("--out", perturb.out, "certificate JSON output")->required();

  std::string check_matrix;
  auto* sub_check = app.add_subcommand("check", "report structure, Perron data and spectrum");
  sub_check->add_option("--matrix", check_matrix, "matrix JSON file")->required();

  std::string polygon_path, fixture;
  bool degenerate_ok = false;
  auto* sub_ratio = app.add_subcommand("geometry-ratio", "polygon area over largest inscribed triangle");
  auto* opt_poly = sub_ratio->add_option("--polygon", polygon_path, "polygon JSON file");
  auto* opt_fix = sub_ratio->add_option("--fixture", fixture, "built-in polygon")
                      ->check(CLI::IsMember({"pentagon", "hexagon", "square"}));
  opt_poly->excludes(opt_fix);
  sub_ratio->add_flag("--degenerate-ok", degenerate_ok, "accept collinear vertices");

  SearchArgs search;
  auto* sub_search = app.add_subcommand("geometry-search", "hill-climb for the largest ratio");
  sub_search->add_option("--n", search.n, "number of vertices (3..8)")->required();
  sub_search->add_option("--restarts", search.restarts, "independent restarts");
  sub_search->add_option("--iters", search.iters, "iterations per restart");
  sub_search->add_option("--seed", search.seed, "seed (default $SPECTRA_SEED or 0)");
  sub_search->add_option("--trace", search.trace, "CSV trace output (iteration,ratio)");
  sub_search->add_option("--out", search.out, "best polygon JSON output");

  ScanArgs scan;
  auto* sub_scan = app.add_subcommand("threshold-scan",
                                      "alpha_sum over random diagonal rescalings of a matrix");
  sub_scan->add_option("--matrix", scan.matrix, "matrix JSON file")->required();
  sub_scan->add_option("--b", scan.b, "real part of the pair")->required();
  sub_scan->add_option("--c", scan.c, "imaginary part of the pair")->required();
  sub_scan->add_option("--samples", scan.samples, "number of rescalings");
  sub_scan->add_option("--seed", scan.seed, "seed (default $SPECTRA_SEED or 0)");
  sub_scan->add_option("--out", scan.out, "CSV output")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  try {
    if (sub_perturb->parsed()) return cmd_perturb(perturb, out);
    if (sub_check->parsed()) return cmd_check(check_matrix, out);
    if (sub_ratio->parsed()) return cmd_geometry_ratio(polygon_path, fixture, degenerate_ok, out);
    if (sub_search->parsed()) return cmd_geometry_search(search, out);
    if (sub_scan->parsed()) return cmd_threshold_scan(scan, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::PostconditionFailed ? kVerificationFailed : kInputError;
  }
  return kInputError;
}

}  // namespace spectra::cli
