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

// Acceptance run: one PASS/FAIL line per criterion with its measured margins
// and wall time. Exit status is nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "spectra/eigen.hpp"
#include "spectra/error.hpp"
#include "spectra/nonneg.hpp"
#include "spectra/perturb.hpp"
#include "spectra/polygeom.hpp"
#include "spectra/spectrum.hpp"
#include "support/random_instances.hpp"

using namespace spectra;
using spectra::testing::Rng;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = false;
  std::string detail;
};

template <typename... Args>
std::string fmt(const char* f, Args... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

Outcome hexagon() {
  const ConvexPolygon hex = extremal_hexagon();
  const RatioReport r = triangle_ratio(hex);
  const Point p = hex[r.best_triple[0]], q = hex[r.best_triple[1]], s = hex[r.best_triple[2]];
  const bool corners = p == Point{0, 0} && q == Point{1, 0} && s == Point{0, 1};
  const double err = std::fabs(r.ratio - 2.25);
  return {err <= 1e-12 && corners && r.triangle_double_area == 1.0,
          fmt("ratio=%.17g |err|=%.3g triangle=(%g,%g),(%g,%g),(%g,%g) double_area=%.17g", r.ratio,
              err, p.x, p.y, q.x, q.y, s.x, s.y, r.triangle_double_area)};
}

Outcome pentagon() {
  const ConvexPolygon pent = extremal_pentagon();
  const RatioReport r = triangle_ratio(pent);
  double worst = 0.0;
  for (std::size_t i = 0; i < 5; ++i) {
    for (std::size_t j = i + 1; j < 5; ++j) {
      for (std::size_t k = j + 1; k < 5; ++k) worst = std::max(worst, det3(pent[i], pent[j], pent[k]));
    }
  }
  const double err = std::fabs(r.ratio - std::sqrt(5.0));
  return {err <= 1e-12 && worst <= 1.0 + 1e-12,
          fmt("ratio=%.17g |err|=%.3g max_triple_double_area=%.17g", r.ratio, err, worst)};
}

Outcome ratio_bound() {
  constexpr std::uint64_t kPerN = 200000;
  std::string detail;
  long violations = 0;
  for (int n = 3; n <= 6; ++n) {
    double worst = 0.0;
    for (std::uint64_t k = 0; k < kPerN; ++k) {
      const std::uint64_t seed = static_cast<std::uint64_t>(n) * 1000003ULL * kPerN + k;
      const double ratio = triangle_ratio(random_convex_polygon(n, seed)).ratio;
      worst = std::max(worst, ratio);
      if (ratio > gamma(n) + 1e-9) ++violations;
    }
    detail += fmt("n=%d max=%.12f ", n, worst);
  }
  detail += fmt("violations=%ld", violations);
  return {violations == 0, detail};
}

Outcome tightness() {
  bool ok = true;
  std::string detail;
  for (int n = 4; n <= 6; ++n) {
    const SearchResult res = search_max_ratio(static_cast<std::size_t>(n), 50, 2000, 0);
    const double gap = gamma(n) - res.best_ratio;
    ok = ok && gap <= 1e-3 && res.best_ratio <= gamma(n) + 1e-9;
    detail += fmt("n=%d best=%.12f gap=%.3g ", n, res.best_ratio, gap);
  }
  return {ok, detail};
}

Outcome rank_update_equivalence() {
  Rng rng(20261016);
  int failures = 0;
  double worst = 0.0;
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 8)(rng);
    const std::size_t r = std::uniform_int_distribution<std::size_t>(1, std::min<std::size_t>(3, n))(rng);
    const auto inst = spectra::testing::random_invariant_instance(n, r, rng);
    const DenseMatrix out = rank_update(inst.a, inst.x, inst.d, inst.c);
    const Spectrum expected = merge(eigenvalues(matadd(inst.d, matmul(inst.c, inst.x))),
                                    spectra::testing::eigenvalues_or_empty(inst.e));
    const MatchReport m = match_spectra(eigenvalues(out), expected, 1e-7);
    worst = std::max(worst, m.bottleneck);
    if (!m.matched) ++failures;
  }
  return {failures == 0, fmt("trials=500 failures=%d worst_bottleneck=%.3g", failures, worst)};
}

struct ShiftTrial {
  std::size_t n = 0;
  double t = 0.0;
  double threshold = 0.0;
  double alpha_sum = 0.0;
  double rerun_margin = 0.0;
  bool rerun_ok = false;
};

std::vector<ShiftTrial> g_trials;

Outcome end_to_end() {
  Rng rng(7010);
  int failures = 0;
  double worst_margin = 0.0, worst_dev_rel = 0.0;
  std::string first_error;
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 3 + static_cast<std::size_t>(trial % 6);
    const auto inst = spectra::testing::random_shift_instance(n, rng);
    const double t = spectra::testing::uniform(rng, 0.0, 1.0);
    const double g = gamma(static_cast<int>(n));
    const double norm = frobenius_norm(inst.a);
    ShiftOptions opts;
    opts.match_tol = 1e-6 * (1.0 + norm);
    try {
      const Certificate cert = shift_complex_pair(inst.a, inst.pair.b, inst.pair.c, t, g * t, opts);
      // Independent target built from the input spectrum.
      const double rho = perron(inst.a).rho;
      Spectrum target = remove_nearest(eigenvalues(inst.a), {Complex(rho), Complex(inst.pair.b, inst.pair.c),
                                                             Complex(inst.pair.b, -inst.pair.c)});
      target.values.push_back(rho + g * t);
      target.values.emplace_back(inst.pair.b + t, inst.pair.c);
      target.values.emplace_back(inst.pair.b + t, -inst.pair.c);
      const MatchReport m = match_spectra(eigenvalues(cert.output), target, opts.match_tol);
      const double margin = min_entry(cert.output);
      worst_margin = std::min(worst_margin, margin);
      worst_dev_rel = std::max(worst_dev_rel, m.bottleneck / (1.0 + norm));
      if (!m.matched || margin < -1e-9) ++failures;

      ShiftTrial rec{n, t, cert.threshold, cert.plan.alpha_sum, 0.0, false};
      try {
        const Certificate at = shift_complex_pair(inst.a, inst.pair.b, inst.pair.c, t, cert.threshold, opts);
        rec.rerun_margin = at.nonneg_margin;
        rec.rerun_ok = true;
      } catch (const Error& e) {
        rec.rerun_margin = -std::numeric_limits<double>::infinity();
      }
      g_trials.push_back(rec);
    } catch (const Error& e) {
      ++failures;
      if (first_error.empty()) first_error = fmt(" first_error=\"trial %d: %s\"", trial, e.what());
    }
  }
  return {failures == 0, fmt("trials=300 failures=%d min_margin=%.3g max_deviation/(1+|A|)=%.3g%s", failures,
                             worst_margin, worst_dev_rel, first_error.c_str())};
}

Outcome alpha_sum_bounds() {
  if (g_trials.size() != 300) return {false, fmt("only %zu plans available", g_trials.size())};
  int violations = 0;
  double lo = 0.0, hi = -2.0, worst_n3 = 0.0;
  for (const ShiftTrial& tr : g_trials) {
    const double g = gamma(static_cast<int>(tr.n));
    lo = std::min(lo, tr.alpha_sum + g);
    hi = std::max(hi, tr.alpha_sum);
    if (tr.alpha_sum < -g - 1e-9 || tr.alpha_sum > -1.0 + 1e-9) ++violations;
    if (tr.n == 3) worst_n3 = std::max(worst_n3, std::fabs(tr.alpha_sum + 1.0));
  }
  return {violations == 0 && worst_n3 <= 1e-9,
          fmt("plans=%zu violations=%d min(alpha_sum+gamma)=%.3g max(alpha_sum)=%.12f n3_max|alpha_sum+1|=%.3g",
              g_trials.size(), violations, lo, hi, worst_n3)};
}

Outcome threshold_sanity() {
  if (g_trials.size() != 300) return {false, fmt("only %zu plans available", g_trials.size())};
  int violations = 0;
  double worst_rerun = 0.0;
  for (const ShiftTrial& tr : g_trials) {
    const double g = gamma(static_cast<int>(tr.n));
    if (tr.threshold < tr.t - 1e-9 || tr.threshold > g * tr.t + 1e-9) ++violations;
    if (!tr.rerun_ok || tr.rerun_margin < -1e-6) ++violations;
    worst_rerun = std::min(worst_rerun, tr.rerun_margin);
  }
  return {violations == 0, fmt("trials=%zu violations=%d min_rerun_margin=%.3g", g_trials.size(), violations,
                               worst_rerun)};
}

Outcome constant_row_sums() {
  Rng rng(9009);
  int failures = 0;
  double worst_spread = 0.0, worst_match = 0.0;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 3 + static_cast<std::size_t>(trial % 6);
    const DenseMatrix a = spectra::testing::random_irreducible(n, rng);
    const ConstantRowSumForm form = constant_row_sum_form(a);
    const double rho = form.perron.rho;
    double spread = 0.0;
    for (double s : row_sums(form.matrix)) spread = std::max(spread, std::fabs(s - rho));
    const MatchReport m = match_spectra(eigenvalues(a), eigenvalues(form.matrix), 1e-7);
    worst_spread = std::max(worst_spread, spread / (1.0 + rho));
    worst_match = std::max(worst_match, m.bottleneck);
    if (spread > 1e-9 * (1.0 + rho) || !m.matched) ++failures;
  }
  return {failures == 0, fmt("trials=200 failures=%d max_spread/(1+rho)=%.3g worst_bottleneck=%.3g", failures,
                             worst_spread, worst_match)};
}

struct Criterion {
  int id;
  const char* name;
  double time_limit_s;
  Outcome (*body)();
};

}  // namespace

int main() {
  const Criterion criteria[] = {
      {1, "extremal hexagon", 1e-3, hexagon},
      {2, "extremal pentagon", 1e-3, pentagon},
      {3, "ratio upper bound, 200000 polygons per n", 60.0, ratio_bound},
      {4, "search tightness", 120.0, tightness},
      {5, "rank update spectrum", 30.0, rank_update_equivalence},
      {6, "pair shift end to end", 60.0, end_to_end},
      {7, "alpha_sum interval", 0.0, alpha_sum_bounds},
      {8, "construction threshold", 0.0, threshold_sanity},
      {9, "constant row sums", 10.0, constant_row_sums},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto start = Clock::now();
    Outcome out;
    try {
      out = c.body();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double elapsed = seconds_since(start);
    // Criteria 7 and 8 reuse the trials of criterion 6 and carry no budget.
    const bool in_time = c.time_limit_s <= 0.0 || elapsed < c.time_limit_s;
    const bool pass = out.pass && in_time;
    if (!pass) ++failed;
    std::printf("%s criterion %d (%s): %s time=%.3fs%s%s\n", pass ? "PASS" : "FAIL", c.id, c.name,
                out.detail.c_str(), elapsed, c.time_limit_s > 0.0 ? fmt(" limit=%gs", c.time_limit_s).c_str() : "",
                in_time ? "" : " OVER BUDGET");
    std::fflush(stdout);
  }
  std::printf("%d/9 criteria passed\n", 9 - failed);
  return failed == 0 ? 0 : 1;
}
