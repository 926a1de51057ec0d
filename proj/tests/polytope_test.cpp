#include <random>

#include "cyclotorsion/polytope.hpp"
#include "gtest/gtest.h"

namespace cyclotorsion {
namespace {

using Pts = std::vector<LatticePoint>;

TorusCurve curve_on(const Pts& support) {
  TorusCurve::Terms t;
  long k = 1;
  for (const auto& p : support) t.emplace(p, CycloNum(k++));
  return TorusCurve(std::move(t));
}

LatticePolytope hull_of_sums(const LatticePolytope& p, const LatticePolytope& q) {
  Pts sums;
  for (const auto& a : p.vertices())
    for (const auto& b : q.vertices()) sums.push_back(a + b);
  return LatticePolytope::hull(sums);
}

Pts random_points(std::mt19937& rng, int count, int span) {
  std::uniform_int_distribution<long> c(-span, span);
  Pts pts;
  for (int i = 0; i < count; ++i) pts.push_back({c(rng), c(rng)});
  return pts;
}

// Shoelace area of the lattice points inside, counted by Pick: A = I + B/2 - 1.
// Used as an independent check of twice_area on small boxes.
long pick_twice_area(const LatticePolytope& p, int span) {
  const auto& v = p.vertices();
  if (v.size() < 3) return 0;
  auto side = [&](std::size_t i, const LatticePoint& x) { return cross(v[(i + 1) % v.size()] - v[i], x - v[i]); };
  long interior = 0, boundary = 0;
  for (long x = -2 * span; x <= 2 * span; ++x) {
    for (long y = -2 * span; y <= 2 * span; ++y) {
      bool inside = true, on_edge = false;
      for (std::size_t i = 0; i < v.size(); ++i) {
        const long s = side(i, {x, y});
        if (s < 0) inside = false;
        if (s == 0) on_edge = true;
      }
      if (!inside) continue;
      (on_edge ? boundary : interior)++;
    }
  }
  return 2 * interior + boundary - 2;
}

TEST(Polytope, HullOrderAndDegenerateInputs) {
  const auto sq = LatticePolytope::hull({{1, 1}, {0, 0}, {1, 0}, {0, 1}, {0, 0}});
  EXPECT_EQ(sq.vertices(), (Pts{{0, 0}, {1, 0}, {1, 1}, {0, 1}}));
  EXPECT_EQ(LatticePolytope::hull({{2, 2}, {0, 0}, {1, 1}}).vertices(), (Pts{{0, 0}, {2, 2}}));
  EXPECT_EQ(LatticePolytope::hull({{3, -1}}).vertices(), (Pts{{3, -1}}));
  EXPECT_THROW(LatticePolytope::hull({}), Error);
}

TEST(Polytope, AreaExamples) {
  const auto sq = LatticePolytope::hull({{0, 0}, {1, 0}, {0, 1}, {1, 1}});
  EXPECT_EQ(area(sq), Rational(1));
  EXPECT_EQ(area(minkowski_sum(sq, sq.scaled(2))), Rational(9));
  EXPECT_EQ(area(LatticePolytope::hull({{0, 0}, {1, 0}, {0, 1}})), Rational(1, 2));
  EXPECT_EQ(area(LatticePolytope::hull({{0, 0}, {5, 5}})), Rational(0));
}

TEST(Polytope, MinkowskiMatchesHullOfPairwiseSums) {
  std::mt19937 rng(4242);
  for (int iter = 0; iter < 300; ++iter) {
    const auto p = LatticePolytope::hull(random_points(rng, 1 + iter % 7, 4));
    const auto q = LatticePolytope::hull(random_points(rng, 1 + (iter / 7) % 6, 4));
    const auto s = minkowski_sum(p, q);
    EXPECT_EQ(s, hull_of_sums(p, q));
    EXPECT_EQ(s, minkowski_sum(q, p));
    EXPECT_EQ(s.twice_area(), pick_twice_area(s, 8));
  }
}

TEST(Polytope, AreaIsHomogeneousOfDegreeTwo) {
  std::mt19937 rng(11);
  for (int iter = 0; iter < 50; ++iter) {
    const auto p = LatticePolytope::hull(random_points(rng, 5, 3));
    for (long k : {2L, 3L, 5L}) EXPECT_EQ(p.scaled(k).area(), p.area() * k * k);
  }
}

TEST(DifferenceLattice, RankAndFullness) {
  EXPECT_EQ(difference_lattice(Pts{{0, 0}}).rank, 0);
  const auto line = difference_lattice(Pts{{0, 0}, {2, 4}, {1, 2}});
  EXPECT_EQ(line.rank, 1);
  EXPECT_EQ(line.basis, (Pts{{1, 2}}));
  const auto full = difference_lattice(Pts{{0, 0}, {1, 0}, {0, 1}, {1, 1}});
  EXPECT_EQ(full.rank, 2);
  EXPECT_TRUE(full.full);
  const auto even = difference_lattice(Pts{{0, 0}, {2, 0}, {0, 2}});
  EXPECT_EQ(even.rank, 2);
  EXPECT_FALSE(even.full);
  EXPECT_EQ(even.basis, (Pts{{2, 0}, {0, 2}}));
  const auto skew = difference_lattice(Pts{{0, 0}, {1, 1}, {1, -1}});
  EXPECT_EQ(skew.rank, 2);
  EXPECT_FALSE(skew.full);  // index 2
  EXPECT_EQ(skew.basis[0].x * skew.basis[1].y, 2);
}

TEST(DifferenceLattice, BasisSpansEveryDifference) {
  std::mt19937 rng(5);
  for (int iter = 0; iter < 200; ++iter) {
    const auto pts = random_points(rng, 2 + iter % 4, 5);
    const auto info = difference_lattice(pts);
    for (const auto& p : pts) {
      LatticePoint v = p - pts[0];
      if (info.rank == 0) {
        EXPECT_EQ(v, (LatticePoint{0, 0}));
        continue;
      }
      if (info.rank == 1) {
        const auto b = info.basis[0];
        EXPECT_EQ(cross(b, v), 0);
        continue;
      }
      const auto b0 = info.basis[0], b1 = info.basis[1];
      ASSERT_EQ(v.x % b0.x, 0);
      v = v - b0 * (v.x / b0.x);
      EXPECT_EQ(v.y % b1.y, 0);
    }
  }
}

TEST(Bounds, Examples) {
  const TorusCurve f = curve_on({{0, 0}, {1, 0}, {0, 1}, {1, 1}});
  EXPECT_EQ(toric_bezout_bound(f, f), Rational(2));
  const TorusCurve line_x = curve_on({{0, 0}, {1, 0}});
  const TorusCurve line_y = curve_on({{0, 0}, {0, 1}});
  EXPECT_EQ(toric_bezout_bound(line_x, line_y), Rational(1));
  EXPECT_EQ(toric_bezout_bound(line_x, line_x), Rational(0));
  const TorusCurve sq2 = curve_on({{0, 0}, {2, 0}, {0, 2}, {2, 2}});
  EXPECT_EQ(toric_bezout_bound(f, sq2), Rational(4));
  EXPECT_EQ(bidegree_bezout_bound(f, f), 2);
}

TEST(Bounds, SymmetricAndMonotone) {
  std::mt19937 rng(77);
  for (int iter = 0; iter < 100; ++iter) {
    const TorusCurve f = curve_on(random_points(rng, 4, 3));
    const TorusCurve g = curve_on(random_points(rng, 4, 3));
    EXPECT_EQ(toric_bezout_bound(f, g), toric_bezout_bound(g, f));
    EXPECT_GE(toric_bezout_bound(f, g), Rational(0));
    // scaling one Newton polygon scales the mixed area linearly
    EXPECT_EQ(toric_bezout_bound(f.substitute(1, 1, 2), g), toric_bezout_bound(f, g) * 2);
  }
}

}  // namespace
}  // namespace cyclotorsion
