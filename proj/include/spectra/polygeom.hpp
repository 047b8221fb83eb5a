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

// Convex polygons and the ratio between a polygon's area and the largest
// triangle inscribed in it.
//
// The ratio is bounded by gamma(n) = 1, 2, sqrt(5), 9/4 for n = 3, 4, 5, 6,
// and these bounds are attained (extremal_pentagon, extremal_hexagon). For
// n >= 7 the polygon ratio keeps growing with n; gamma(n) = 9/4 there is the
// constant used by the eigenvalue construction, which only ever looks at six
// points at a time, not a bound on the polygon ratio.

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace spectra {

struct Point {
  double x = 0.0;
  double y = 0.0;
  friend bool operator==(const Point&, const Point&) = default;
};

using IndexTriple = std::array<std::size_t, 3>;

/// det [[1, 1, 1], [p.x, q.x, r.x], [p.y, q.y, r.y]]: twice the signed area
/// of the triangle pqr, positive iff p -> q -> r turns counterclockwise.
inline double det3(Point p, Point q, Point r) noexcept {
  return (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
}

/// Counterclockwise convex polygon with 3 to 64 vertices.
///
/// Consecutive turns must satisfy cross > 1e-12 * scale^2 (scale = largest
/// coordinate magnitude). With `degenerate_ok`, collinear and repeated
/// vertices (cross >= -1e-12 * scale^2) are accepted as well.
class ConvexPolygon {
 public:
  static constexpr std::size_t kMinVertices = 3;
  static constexpr std::size_t kMaxVertices = 64;

  /// Throws Error(DomainError) for a bad vertex count, Error(NonFinite) and
  /// Error(NotConvex).
  static ConvexPolygon make(std::vector<Point> vertices, bool degenerate_ok = false);

  const std::vector<Point>& vertices() const noexcept { return vertices_; }
  std::size_t size() const noexcept { return vertices_.size(); }
  const Point& operator[](std::size_t i) const noexcept { return vertices_[i]; }
  bool degenerate_ok() const noexcept { return degenerate_ok_; }
  double scale() const noexcept;

  /// Indices of the vertices that are genuine corners (all of them for a
  /// strictly convex polygon).
  std::vector<std::size_t> corner_indices() const;
  /// Number of genuine corners.
  std::size_t effective_size() const { return corner_indices().size(); }

 private:
  ConvexPolygon(std::vector<Point> v, bool degenerate_ok)
      : vertices_(std::move(v)), degenerate_ok_(degenerate_ok) {}

  std::vector<Point> vertices_;
  bool degenerate_ok_ = false;
};

/// True iff `vertices` form a convex counterclockwise polygon under the
/// tolerance rules of ConvexPolygon. Never throws.
bool is_convex_ccw(const std::vector<Point>& vertices, bool degenerate_ok = false) noexcept;

/// Twice the polygon area, as the fan sum of det3(P0, Pm, Pm+1).
double double_area(const ConvexPolygon& poly) noexcept;

/// Twice the area by the shoelace formula.
double shoelace_double_area(const std::vector<Point>& vertices) noexcept;

struct TriangleMax {
  IndexTriple triple{};
  double double_area = 0.0;
};

/// Largest vertex triangle by exhaustive scan of all C(n, 3) triples; ties
/// (within 1e-12 * scale^2) go to the lexicographically smallest triple.
/// Throws Error(AllCollinear) if every triple is flat.
TriangleMax max_triangle(const ConvexPolygon& poly);

struct RatioReport {
  double polygon_double_area = 0.0;
  IndexTriple best_triple{};
  double triangle_double_area = 0.0;
  double ratio = 0.0;
};

RatioReport triangle_ratio(const ConvexPolygon& poly);

/// 1, 2, sqrt(5) for n = 3, 4, 5 and 9/4 for n >= 6. Throws
/// Error(DomainError) for n < 3.
double gamma(int n);

/// The pentagon attaining sqrt(5):
/// (0,0), (1,0), (1,g), (0,1), (-g,g) with g = (sqrt(5) - 1) / 2.
ConvexPolygon extremal_pentagon();

/// The hexagon attaining 9/4:
/// (0,0), (1,0), (5/6,2/3), (0,1), (-1/4,1), (-2/3,2/3).
ConvexPolygon extremal_hexagon();

ConvexPolygon unit_square();

/// Image of `poly` under the affine map sending the vertices of `triple` to
/// (0,0), (1,0), (0,1). If that map reverses orientation the vertex order is
/// reversed so the result stays counterclockwise. Throws
/// Error(CollinearTriple).
ConvexPolygon affine_normalize(const ConvexPolygon& poly, const IndexTriple& triple);

/// Deterministic strictly convex n-gon: convex hull of points on a randomly
/// perturbed circle (redrawn until all n points are extreme), then a random
/// orientation-preserving affine map, multiplied by `scale`.
/// Throws Error(DomainError) for n outside [3, 64] and
/// Error(GenerationFailed) after 1000 attempts.
ConvexPolygon random_convex_polygon(std::size_t n, std::uint64_t seed, double scale = 1.0);

struct TracePoint {
  std::size_t iteration = 0;  // global across restarts
  double ratio = 0.0;         // ratio of the current climber
};

struct SearchResult {
  ConvexPolygon best_polygon;
  double best_ratio = 0.0;
  std::vector<TracePoint> trace;
};

/// Derivative-free maximization of triangle_ratio over n-gons, n in [3, 8].
///
/// Each restart starts from random_convex_polygon with a seed derived from
/// (seed, restart) and hill-climbs: every iteration tries +-step on each
/// coordinate plus a few random directions, rejects moves that break
/// convexity, halves the step after an iteration without progress (floor
/// 1e-9) and re-normalizes on the current largest triangle. The best restart
/// wins; ties go to the lower restart index, so the result does not depend
/// on the order restarts are evaluated in.
SearchResult search_max_ratio(std::size_t n, int restarts, int iters, std::uint64_t seed);

}  // namespace spectra
