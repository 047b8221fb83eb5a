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

#include "spectra/polygeom.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "spectra/error.hpp"
#include "spectra/kernels.hpp"

namespace spectra {

namespace {

constexpr double kRelTol = 1e-12;

double coordinate_scale(const std::vector<Point>& v) noexcept {
  double s = 0.0;
  for (const Point& p : v) s = std::max({s, std::fabs(p.x), std::fabs(p.y)});
  return s;
}

double turn(const Point& a, const Point& b, const Point& c) noexcept {
  return (b.x - a.x) * (c.y - b.y) - (b.y - a.y) * (c.x - b.x);
}

std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Andrew's monotone chain; drops collinear points, returns CCW order.
std::vector<Point> convex_hull(std::vector<Point> pts) {
  std::sort(pts.begin(), pts.end(), [](const Point& a, const Point& b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  });
  if (pts.size() < 3) return pts;
  std::vector<Point> hull(2 * pts.size());
  std::size_t k = 0;
  for (const Point& p : pts) {
    while (k >= 2 && det3(hull[k - 2], hull[k - 1], p) <= 0.0) --k;
    hull[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
    const Point& p = pts[i];
    while (k >= lower && det3(hull[k - 2], hull[k - 1], p) <= 0.0) --k;
    hull[k++] = p;
  }
  hull.resize(k - 1);
  return hull;
}

// Ratio without bookkeeping, for the inner loop of the search. Returns 0 for
// flat input.
double fast_ratio(const std::vector<Point>& v, std::vector<double>& xs,
                  std::vector<double>& ys) {
  const std::size_t n = v.size();
  xs.resize(n);
  ys.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    xs[i] = v[i].x;
    ys[i] = v[i].y;
  }
  double area = 0.0;
  for (std::size_t m = 1; m + 1 < n; ++m) area += det3(v[0], v[m], v[m + 1]);
  double best = 0.0;
  for (std::size_t i = 0; i + 2 < n; ++i) {
    for (std::size_t j = i + 1; j + 1 < n; ++j) {
      const std::size_t rest = n - j - 1;
      best = std::max(best, kernels::max_abs_cross(
                                v[i].x, v[i].y, v[j].x - v[i].x, v[j].y - v[i].y,
                                {xs.data() + j + 1, rest}, {ys.data() + j + 1, rest}));
    }
  }
  return best > 0.0 ? area / best : 0.0;
}

}  // namespace

bool is_convex_ccw(const std::vector<Point>& v, bool degenerate_ok) noexcept {
  const std::size_t n = v.size();
  if (n < 3) return false;
  for (const Point& p : v) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) return false;
  }
  const double scale = coordinate_scale(v);
  if (scale == 0.0) return false;
  const double tol = kRelTol * scale * scale;
  double winding = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const Point& a = v[i];
    const Point& b = v[(i + 1) % n];
    const Point& c = v[(i + 2) % n];
    const double cr = turn(a, b, c);
    if (degenerate_ok ? cr < -tol : cr <= tol) return false;
    const double dt = (b.x - a.x) * (c.x - b.x) + (b.y - a.y) * (c.y - b.y);
    winding += std::atan2(cr, dt);
  }
  // All left turns plus a single revolution rules out star polygons.
  if (std::fabs(winding - 2.0 * std::numbers::pi) > 1e-6) return false;
  return shoelace_double_area(v) > 0.0;
}

ConvexPolygon ConvexPolygon::make(std::vector<Point> vertices, bool degenerate_ok) {
  if (vertices.size() < kMinVertices || vertices.size() > kMaxVertices) {
    fail(ErrorKind::DomainError, "polygon must have 3 to 64 vertices, got " +
                                     std::to_string(vertices.size()));
  }
  for (const Point& p : vertices) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
      fail(ErrorKind::NonFinite, "polygon vertex is not finite");
    }
  }
  if (!is_convex_ccw(vertices, degenerate_ok)) {
    fail(ErrorKind::NotConvex, degenerate_ok
                                   ? "vertices are not a convex counterclockwise polygon"
                                   : "vertices are not a strictly convex counterclockwise polygon");
  }
  return ConvexPolygon(std::move(vertices), degenerate_ok);
}

double ConvexPolygon::scale() const noexcept { return coordinate_scale(vertices_); }

std::vector<std::size_t> ConvexPolygon::corner_indices() const {
  const std::size_t n = vertices_.size();
  const double s = scale();
  const double tol = kRelTol * s * s;
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < n; ++i) {
    const Point& prev = vertices_[(i + n - 1) % n];
    if (turn(prev, vertices_[i], vertices_[(i + 1) % n]) > tol) out.push_back(i);
  }
  return out;
}

double double_area(const ConvexPolygon& poly) noexcept {
  const auto& v = poly.vertices();
  double s = 0.0;
  for (std::size_t m = 1; m + 1 < v.size(); ++m) s += det3(v[0], v[m], v[m + 1]);
  return s;
}

double shoelace_double_area(const std::vector<Point>& v) noexcept {
  double s = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Point& a = v[i];
    const Point& b = v[(i + 1) % v.size()];
    s += a.x * b.y - b.x * a.y;
  }
  return s;
}

TriangleMax max_triangle(const ConvexPolygon& poly) {
  const auto& v = poly.vertices();
  const std::size_t n = v.size();
  std::vector<double> xs(n), ys(n);
  for (std::size_t i = 0; i < n; ++i) {
    xs[i] = v[i].x;
    ys[i] = v[i].y;
  }
  double best = 0.0;
  for (std::size_t i = 0; i + 2 < n; ++i) {
    for (std::size_t j = i + 1; j + 1 < n; ++j) {
      const std::size_t rest = n - j - 1;
      best = std::max(best, kernels::max_abs_cross(
                                v[i].x, v[i].y, v[j].x - v[i].x, v[j].y - v[i].y,
                                {xs.data() + j + 1, rest}, {ys.data() + j + 1, rest}));
    }
  }
  if (!(best > 0.0)) fail(ErrorKind::AllCollinear, "all vertex triples are collinear");

  const double s = poly.scale();
  const double cutoff = best - kRelTol * s * s;
  for (std::size_t i = 0; i + 2 < n; ++i) {
    for (std::size_t j = i + 1; j + 1 < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        const double d = std::fabs(det3(v[i], v[j], v[k]));
        if (d >= cutoff) return {{i, j, k}, d};
      }
    }
  }
  return {};  // unreachable: the maximum itself passes the cutoff
}

RatioReport triangle_ratio(const ConvexPolygon& poly) {
  RatioReport r;
  r.polygon_double_area = double_area(poly);
  if (poly.degenerate_ok()) {
    const auto corners = poly.corner_indices();
    if (corners.size() < 3) fail(ErrorKind::AllCollinear, "polygon has fewer than 3 corners");
    std::vector<Point> sub;
    for (std::size_t i : corners) sub.push_back(poly[i]);
    const TriangleMax m = max_triangle(ConvexPolygon::make(std::move(sub), true));
    r.best_triple = {corners[m.triple[0]], corners[m.triple[1]], corners[m.triple[2]]};
    r.triangle_double_area = m.double_area;
  } else {
    const TriangleMax m = max_triangle(poly);
    r.best_triple = m.triple;
    r.triangle_double_area = m.double_area;
  }
  r.ratio = r.polygon_double_area / r.triangle_double_area;
  return r;
}

double gamma(int n) {
  if (n < 3) fail(ErrorKind::DomainError, "gamma(n) needs n >= 3, got " + std::to_string(n));
  switch (n) {
    case 3: return 1.0;
    case 4: return 2.0;
    case 5: return std::sqrt(5.0);
    default: return 2.25;
  }
}

ConvexPolygon extremal_pentagon() {
  const double g = (std::sqrt(5.0) - 1.0) / 2.0;
  return ConvexPolygon::make({{0.0, 0.0}, {1.0, 0.0}, {1.0, g}, {0.0, 1.0}, {-g, g}});
}

ConvexPolygon extremal_hexagon() {
  return ConvexPolygon::make({{0.0, 0.0},
                              {1.0, 0.0},
                              {5.0 / 6.0, 2.0 / 3.0},
                              {0.0, 1.0},
                              {-1.0 / 4.0, 1.0},
                              {-2.0 / 3.0, 2.0 / 3.0}});
}

ConvexPolygon unit_square() {
  return ConvexPolygon::make({{0.0, 0.0}, {1.0, 0.0}, {1.0, 1.0}, {0.0, 1.0}});
}

ConvexPolygon affine_normalize(const ConvexPolygon& poly, const IndexTriple& triple) {
  for (std::size_t idx : triple) {
    if (idx >= poly.size()) fail(ErrorKind::InvalidArgument, "triple index out of range");
  }
  const Point o = poly[triple[0]];
  const double ax = poly[triple[1]].x - o.x, ay = poly[triple[1]].y - o.y;
  const double bx = poly[triple[2]].x - o.x, by = poly[triple[2]].y - o.y;
  const double det = ax * by - ay * bx;
  const double s = poly.scale();
  if (!(std::fabs(det) > kRelTol * s * s)) {
    fail(ErrorKind::CollinearTriple, "normalizing triple is collinear");
  }
  std::vector<Point> out;
  out.reserve(poly.size());
  for (const Point& p : poly.vertices()) {
    const double dx = p.x - o.x, dy = p.y - o.y;
    out.push_back({(by * dx - bx * dy) / det, (ax * dy - ay * dx) / det});
  }
  if (det < 0.0) std::reverse(out.begin(), out.end());
  return ConvexPolygon::make(std::move(out), poly.degenerate_ok());
}

ConvexPolygon random_convex_polygon(std::size_t n, std::uint64_t seed, double scale) {
  if (n < ConvexPolygon::kMinVertices || n > ConvexPolygon::kMaxVertices) {
    fail(ErrorKind::DomainError, "random_convex_polygon: n must be in [3, 64]");
  }
  if (!(scale > 0.0) || !std::isfinite(scale)) {
    fail(ErrorKind::InvalidArgument, "random_convex_polygon: scale must be positive");
  }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_real_distribution<double> sym(-1.0, 1.0);
  const double two_pi = 2.0 * std::numbers::pi;
  double amplitude = 0.6 * unit(rng);
  for (int attempt = 0; attempt < 1000; ++attempt, amplitude *= 0.95) {
    std::vector<Point> pts(n);
    for (Point& p : pts) {
      const double theta = two_pi * unit(rng);
      const double r = 1.0 + amplitude * sym(rng);
      p = {r * std::cos(theta), r * std::sin(theta)};
    }
    std::vector<Point> hull = convex_hull(std::move(pts));
    if (hull.size() != n) continue;

    // Random shear/stretch/rotation with positive determinant.
    const double a = 0.5 + 1.5 * unit(rng);
    const double d = 0.5 + 1.5 * unit(rng);
    const double b = sym(rng);
    const double phi = two_pi * unit(rng);
    const double c = std::cos(phi), s = std::sin(phi);
    const double tx = sym(rng), ty = sym(rng);
    for (Point& p : hull) {
      const double x = a * p.x + b * p.y;
      const double y = d * p.y;
      p = {scale * (c * x - s * y + tx), scale * (s * x + c * y + ty)};
    }
    if (is_convex_ccw(hull)) return ConvexPolygon::make(std::move(hull));
  }
  fail(ErrorKind::GenerationFailed,
       "no strictly convex " + std::to_string(n) + "-gon after 1000 attempts");
}

namespace {

double& coordinate(std::vector<Point>& v, std::size_t c) {
  return c % 2 == 0 ? v[c / 2].x : v[c / 2].y;
}

struct Climb {
  std::vector<Point> best;
  double ratio = 0.0;
  std::vector<TracePoint> trace;
};

std::vector<Point> normalized_on_max(const std::vector<Point>& v) {
  const ConvexPolygon p = ConvexPolygon::make(v);
  return affine_normalize(p, max_triangle(p).triple).vertices();
}

Climb climb(std::size_t n, int iters, std::uint64_t seed, std::size_t first_iteration) {
  constexpr double kInitialStep = 0.1;
  constexpr double kStepFloor = 1e-9;
  constexpr int kStallLimit = 25;

  std::mt19937_64 rng(splitmix64(seed));
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<double> xs, ys;

  Climb out;
  std::vector<Point> cur = normalized_on_max(random_convex_polygon(n, seed).vertices());
  double cur_ratio = fast_ratio(cur, xs, ys);
  double step = kInitialStep;
  int stalls = 0;

  auto try_move = [&](std::vector<Point>& cand) {
    if (!is_convex_ccw(cand)) return false;
    const double r = fast_ratio(cand, xs, ys);
    if (!(r > cur_ratio)) return false;
    cur.swap(cand);
    cur_ratio = r;
    return true;
  };

  std::vector<Point> cand;
  for (int it = 0; it < iters; ++it) {
    bool improved = false;
    for (std::size_t c = 0; c < 2 * n; ++c) {
      for (double sign : {1.0, -1.0}) {
        cand = cur;
        coordinate(cand, c) += sign * step;
        if (try_move(cand)) {
          improved = true;
          break;
        }
      }
    }
    if (!improved) {
      // Ridge moves: two coordinates at once.
      for (std::size_t c1 = 0; c1 < 2 * n && !improved; ++c1) {
        for (std::size_t c2 = c1 + 1; c2 < 2 * n && !improved; ++c2) {
          for (int signs = 0; signs < 4 && !improved; ++signs) {
            cand = cur;
            coordinate(cand, c1) += (signs & 1 ? -step : step);
            coordinate(cand, c2) += (signs & 2 ? -step : step);
            improved = try_move(cand);
          }
        }
      }
    }
    for (std::size_t m = 0; m < 2 * n; ++m) {
      cand = cur;
      std::vector<double> dir(2 * n);
      double norm = 0.0;
      for (double& d : dir) {
        d = normal(rng);
        norm += d * d;
      }
      norm = std::sqrt(norm);
      for (std::size_t k = 0; k < n; ++k) {
        cand[k].x += step * dir[2 * k] / norm;
        cand[k].y += step * dir[2 * k + 1] / norm;
      }
      improved = try_move(cand) || improved;
    }
    if (improved) {
      cur = normalized_on_max(cur);
      cur_ratio = fast_ratio(cur, xs, ys);
      stalls = 0;
    } else {
      step = std::max(step / 2.0, kStepFloor);
      if (step == kStepFloor) ++stalls;
    }
    out.trace.push_back({first_iteration + static_cast<std::size_t>(it), cur_ratio});
    if (stalls >= kStallLimit) {
      // Stuck on a ridge of the max-over-triangles objective: widen again.
      step = kInitialStep;
      stalls = 0;
    }
  }
  out.best = cur;
  out.ratio = cur_ratio;
  return out;
}

}  // namespace

SearchResult search_max_ratio(std::size_t n, int restarts, int iters, std::uint64_t seed) {
  if (n < 3 || n > 8) fail(ErrorKind::DomainError, "search_max_ratio: n must be in [3, 8]");
  if (restarts < 1 || iters < 1) {
    fail(ErrorKind::InvalidArgument, "search_max_ratio: budgets must be >= 1");
  }
  std::vector<Climb> runs;
  runs.reserve(static_cast<std::size_t>(restarts));
  for (int r = 0; r < restarts; ++r) {
    const std::uint64_t rseed = splitmix64(seed ^ splitmix64(static_cast<std::uint64_t>(r) + 1));
    runs.push_back(climb(n, iters, rseed,
                         static_cast<std::size_t>(r) * static_cast<std::size_t>(iters)));
  }
  std::size_t winner = 0;
  for (std::size_t r = 1; r < runs.size(); ++r) {
    if (runs[r].ratio > runs[winner].ratio) winner = r;
  }
  ConvexPolygon best = ConvexPolygon::make(runs[winner].best);
  const double best_ratio = triangle_ratio(best).ratio;
  SearchResult result{std::move(best), best_ratio, {}};
  for (Climb& run : runs) {
    result.trace.insert(result.trace.end(), run.trace.begin(), run.trace.end());
  }
  return result;
}

}  // namespace spectra
