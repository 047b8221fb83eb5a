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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "spectra/error.hpp"
#include "spectra/polygeom.hpp"

using namespace spectra;

namespace {

const double kSqrt5 = std::sqrt(5.0);

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::InvalidArgument;
}

// Shoelace sum written out independently of the library.
double shoelace(const std::vector<Point>& v) {
  double s = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Point& p = v[i];
    const Point& q = v[(i + 1) % v.size()];
    s += p.x * q.y - q.x * p.y;
  }
  return s;
}

double brute_force_max(const std::vector<Point>& pts) {
  double best = 0.0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      for (std::size_t k = j + 1; k < pts.size(); ++k) {
        best = std::max(best, std::fabs(det3(pts[i], pts[j], pts[k])));
      }
    }
  }
  return best;
}

}  // namespace

TEST(Det3, Examples) {
  EXPECT_EQ(det3({0, 0}, {1, 0}, {0, 1}), 1.0);
  EXPECT_EQ(det3({0, 0}, {1, 1}, {3, 3}), 0.0);
  EXPECT_EQ(det3({0, 0}, {0, 1}, {1, 0}), -1.0);
}

TEST(Det3, AntisymmetryAndTranslationInvariance) {
  std::mt19937_64 rng(401);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (int trial = 0; trial < 10000; ++trial) {
    const Point p{u(rng), u(rng)}, q{u(rng), u(rng)}, r{u(rng), u(rng)}, c{u(rng), u(rng)};
    const double d = det3(p, q, r);
    const double scale = 6.0;
    // Swapping the last two arguments swaps the two products exactly.
    EXPECT_EQ(det3(p, r, q), -d);
    EXPECT_NEAR(det3(q, p, r), -d, 1e-12 * scale * scale);
    EXPECT_NEAR(det3({p.x + c.x, p.y + c.y}, {q.x + c.x, q.y + c.y}, {r.x + c.x, r.y + c.y}), d,
                1e-12 * scale * scale);
  }
}

TEST(Gamma, Values) {
  EXPECT_EQ(gamma(3), 1.0);
  EXPECT_EQ(gamma(4), 2.0);
  EXPECT_EQ(gamma(5), kSqrt5);
  EXPECT_EQ(gamma(6), 2.25);
  EXPECT_EQ(gamma(17), 2.25);
  EXPECT_EQ(kind_of([] { gamma(2); }), ErrorKind::DomainError);
}

TEST(Polygon, Validation) {
  EXPECT_EQ(kind_of([] { ConvexPolygon::make({{0, 0}, {1, 0}}); }), ErrorKind::DomainError);
  EXPECT_EQ(kind_of([] { ConvexPolygon::make({{0, 0}, {0, 1}, {1, 0}}); }), ErrorKind::NotConvex);
  EXPECT_EQ(kind_of([] { ConvexPolygon::make({{0, 0}, {2, 0}, {1, 0.1}, {2, 2}}); }), ErrorKind::NotConvex);
  EXPECT_EQ(kind_of([] { ConvexPolygon::make({{0, 0}, {1, 0}, {2, 0}, {0, 1}}); }), ErrorKind::NotConvex);
  EXPECT_EQ(kind_of([] { ConvexPolygon::make({{0, 0}, {1, 0}, {0, std::nan("")}}); }), ErrorKind::NonFinite);
  EXPECT_NO_THROW(ConvexPolygon::make({{0, 0}, {1, 0}, {2, 0}, {0, 1}}, true));
}

TEST(DoubleArea, Fixtures) {
  EXPECT_EQ(double_area(unit_square()), 2.0);
  EXPECT_NEAR(double_area(extremal_hexagon()), 2.25, 1e-15);
  EXPECT_NEAR(shoelace(extremal_hexagon().vertices()), 2.25, 1e-15);
  EXPECT_NEAR(double_area(extremal_pentagon()), kSqrt5, 1e-15);
  EXPECT_NEAR(shoelace(extremal_pentagon().vertices()), kSqrt5, 1e-15);
}

TEST(DoubleArea, FanMatchesShoelaceOnRandomPolygons) {
  for (std::uint64_t seed = 0; seed < 2000; ++seed) {
    const std::size_t n = 3 + seed % 20;
    const double scale = std::pow(10.0, static_cast<double>(seed % 7) - 3.0);
    const ConvexPolygon poly = random_convex_polygon(n, seed, scale);
    EXPECT_NEAR(double_area(poly), shoelace(poly.vertices()), 1e-12 * poly.scale() * poly.scale());
    EXPECT_NEAR(shoelace_double_area(poly.vertices()), shoelace(poly.vertices()),
                1e-12 * poly.scale() * poly.scale());
  }
}

TEST(MaxTriangle, Fixtures) {
  const TriangleMax hex = max_triangle(extremal_hexagon());
  EXPECT_EQ(hex.triple, (IndexTriple{0, 1, 3}));
  EXPECT_EQ(hex.double_area, 1.0);

  const TriangleMax sq = max_triangle(unit_square());
  EXPECT_EQ(sq.triple, (IndexTriple{0, 1, 2}));
  EXPECT_EQ(sq.double_area, 1.0);

  const ConvexPolygon tri = ConvexPolygon::make({{0, 0}, {3, 1}, {1, 2}});
  const TriangleMax t = max_triangle(tri);
  EXPECT_EQ(t.triple, (IndexTriple{0, 1, 2}));
  EXPECT_EQ(t.double_area, det3(tri[0], tri[1], tri[2]));
  EXPECT_EQ(triangle_ratio(tri).ratio, 1.0);
}

TEST(MaxTriangle, AllCollinearPointsAreNotAPolygon) {
  // Zero area fails the orientation invariant even when collinear vertices
  // are allowed, so max_triangle never sees an all-collinear input.
  EXPECT_EQ(kind_of([] { ConvexPolygon::make({{0, 0}, {1, 0}, {2, 0}}, true); }), ErrorKind::NotConvex);
}

TEST(MaxTriangle, PentagonTriplesAtMostOne) {
  const ConvexPolygon p = extremal_pentagon();
  for (std::size_t i = 0; i < 5; ++i) {
    for (std::size_t j = i + 1; j < 5; ++j) {
      for (std::size_t k = j + 1; k < 5; ++k) EXPECT_LE(det3(p[i], p[j], p[k]), 1.0 + 1e-12);
    }
  }
  EXPECT_NEAR(max_triangle(p).double_area, 1.0, 1e-15);
}

TEST(MaxTriangle, VerticesBeatEdgeSamples) {
  // Adding points at every 1/16 along each edge never raises the maximum.
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const ConvexPolygon poly = random_convex_polygon(3 + seed % 6, seed);
    std::vector<Point> pts;
    for (std::size_t i = 0; i < poly.size(); ++i) {
      const Point& p = poly[i];
      const Point& q = poly[(i + 1) % poly.size()];
      for (int s = 0; s < 16; ++s) {
        const double w = s / 16.0;
        pts.push_back({p.x + w * (q.x - p.x), p.y + w * (q.y - p.y)});
      }
    }
    const double vertex_max = max_triangle(poly).double_area;
    EXPECT_NEAR(vertex_max, brute_force_max(poly.vertices()), 0.0);
    EXPECT_LE(brute_force_max(pts), vertex_max * (1.0 + 1e-12)) << "seed " << seed;
  }
}

TEST(TriangleRatio, Fixtures) {
  const RatioReport hex = triangle_ratio(extremal_hexagon());
  EXPECT_NEAR(hex.ratio, 2.25, 1e-12);
  EXPECT_EQ(hex.best_triple, (IndexTriple{0, 1, 3}));
  EXPECT_NEAR(triangle_ratio(extremal_pentagon()).ratio, kSqrt5, 1e-12);
  EXPECT_EQ(triangle_ratio(unit_square()).ratio, 2.0);
}

TEST(TriangleRatio, DegenerateHexagonUsesCorners) {
  // A square with two extra points on its edges.
  const ConvexPolygon p =
      ConvexPolygon::make({{0, 0}, {0.5, 0}, {1, 0}, {1, 1}, {0, 1}, {0, 0.5}}, true);
  EXPECT_EQ(p.effective_size(), 4u);
  const RatioReport r = triangle_ratio(p);
  EXPECT_EQ(r.ratio, 2.0);
  EXPECT_EQ(r.best_triple, (IndexTriple{0, 2, 3}));
}

TEST(TriangleRatio, RandomTrianglesAreExactlyOne) {
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    EXPECT_EQ(triangle_ratio(random_convex_polygon(3, seed)).ratio, 1.0);
  }
}

TEST(TriangleRatio, BoundHoldsOnRandomPolygons) {
  for (std::uint64_t seed = 0; seed < 20000; ++seed) {
    const int n = 3 + static_cast<int>(seed % 4);
    EXPECT_LE(triangle_ratio(random_convex_polygon(n, seed)).ratio, gamma(n) + 1e-9);
  }
}

TEST(AffineNormalize, FixedPointAndInvariance) {
  const ConvexPolygon hex = extremal_hexagon();
  const ConvexPolygon same = affine_normalize(hex, {0, 1, 3});
  for (std::size_t i = 0; i < hex.size(); ++i) {
    EXPECT_NEAR(same[i].x, hex[i].x, 1e-15);
    EXPECT_NEAR(same[i].y, hex[i].y, 1e-15);
  }

  std::mt19937_64 rng(402);
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    const std::size_t n = 3 + seed % 10;
    const ConvexPolygon poly = random_convex_polygon(n, seed, 5.0);
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::shuffle(idx.begin(), idx.end(), rng);
    const IndexTriple triple{idx[0], idx[1], idx[2]};
    const ConvexPolygon img = affine_normalize(poly, triple);
    EXPECT_NEAR(triangle_ratio(img).ratio, triangle_ratio(poly).ratio, 1e-10);
    // The chosen triple lands on the unit corner triangle (up to the
    // orientation-restoring reversal).
    const double d = det3(poly[triple[0]], poly[triple[1]], poly[triple[2]]);
    const std::size_t last = n - 1;
    const auto at = [&](std::size_t i) { return d > 0 ? img[i] : img[last - i]; };
    EXPECT_NEAR(at(triple[0]).x, 0.0, 1e-9);
    EXPECT_NEAR(at(triple[0]).y, 0.0, 1e-9);
    EXPECT_NEAR(at(triple[1]).x, 1.0, 1e-9);
    EXPECT_NEAR(at(triple[2]).y, 1.0, 1e-9);
  }
}

TEST(AffineNormalize, CollinearTripleRejected) {
  const ConvexPolygon p =
      ConvexPolygon::make({{0, 0}, {0.5, 0}, {1, 0}, {1, 1}, {0, 1}}, true);
  EXPECT_EQ(kind_of([&] { affine_normalize(p, {0, 1, 2}); }), ErrorKind::CollinearTriple);
}

TEST(RandomConvexPolygon, DeterministicAndConvex) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const std::size_t n = 3 + seed % 62;
    const ConvexPolygon a = random_convex_polygon(n, seed, 2.0);
    const ConvexPolygon b = random_convex_polygon(n, seed, 2.0);
    EXPECT_EQ(a.vertices(), b.vertices());
    EXPECT_EQ(a.size(), n);
    EXPECT_TRUE(is_convex_ccw(a.vertices()));
  }
  EXPECT_EQ(kind_of([] { random_convex_polygon(65, 0); }), ErrorKind::DomainError);
}

TEST(SearchMaxRatio, SmallBudgetIsDeterministicAndBounded) {
  const SearchResult a = search_max_ratio(5, 3, 200, 7);
  const SearchResult b = search_max_ratio(5, 3, 200, 7);
  EXPECT_EQ(a.best_ratio, b.best_ratio);
  EXPECT_EQ(a.best_polygon.vertices(), b.best_polygon.vertices());
  ASSERT_EQ(a.trace.size(), b.trace.size());
  EXPECT_EQ(a.trace.size(), 600u);
  EXPECT_LE(a.best_ratio, kSqrt5 + 1e-9);
  EXPECT_EQ(a.best_ratio, triangle_ratio(a.best_polygon).ratio);
  for (const TracePoint& p : a.trace) EXPECT_LE(p.ratio, a.best_ratio);
}

TEST(SearchMaxRatio, SquareIsReachedQuickly) {
  EXPECT_GE(search_max_ratio(4, 4, 400, 1).best_ratio, 2.0 - 1e-3);
}

TEST(SearchMaxRatio, HeptagonMayExceedTheHexagonBound) {
  // gamma(7) is only the matrix shift constant; polygons may exceed it.
  const SearchResult r = search_max_ratio(7, 4, 600, 3);
  EXPECT_GT(r.best_ratio, 2.25);
}
