#pragma once

// Lattice convex geometry in the plane: supports, difference lattices, Newton
// polygons, Minkowski sums and the toric Bezout bound. Areas are Euclidean
// (the unit square has area 1), kept as exact rationals.

#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

#include "cyclotorsion/torus_curve.hpp"

namespace cyclotorsion {

struct LatticeInfo {
  int rank = 0;
  bool full = false;  // lattice equals Z^2; only meaningful at rank 2
  std::vector<LatticePoint> basis;
};

/// Convex lattice polygon stored as its extreme points in counterclockwise
/// order, starting from the lexicographically smallest vertex. Points and
/// segments are allowed (one or two vertices).
class LatticePolytope {
 public:
  LatticePolytope() = default;

  /// Convex hull of a nonempty point set (monotone chain, collinear points dropped).
  static LatticePolytope hull(std::vector<LatticePoint> points) {
    if (points.empty()) throw Error("convex hull of an empty point set");
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    LatticePolytope p;
    if (points.size() <= 2) {
      p.vertices_ = points;
      return p;
    }
    std::vector<LatticePoint> h(2 * points.size());
    std::size_t k = 0;
    for (const auto& pt : points) {
      while (k >= 2 && cross(h[k - 1] - h[k - 2], pt - h[k - 2]) <= 0) --k;
      h[k++] = pt;
    }
    for (std::size_t i = points.size() - 1, t = k + 1; i-- > 0;) {
      while (k >= t && cross(h[k - 1] - h[k - 2], points[i] - h[k - 2]) <= 0) --k;
      h[k++] = points[i];
    }
    h.resize(k - 1);
    p.vertices_ = std::move(h);
    return p;
  }

  const std::vector<LatticePoint>& vertices() const noexcept { return vertices_; }

  /// Twice the area, an integer.
  long twice_area() const {
    long s = 0;
    const std::size_t n = vertices_.size();
    for (std::size_t i = 0; i < n; ++i) s += cross(vertices_[i], vertices_[(i + 1) % n]);
    return std::abs(s);
  }

  Rational area() const {
    Rational a(twice_area(), 2);
    a.canonicalize();
    return a;
  }

  LatticePolytope scaled(long k) const {
    LatticePolytope p;
    for (const auto& v : vertices_) p.vertices_.push_back(v * k);
    return p;
  }

  bool operator==(const LatticePolytope&) const = default;

 private:
  std::vector<LatticePoint> vertices_;
};

inline Rational area(const LatticePolytope& p) { return p.area(); }

namespace detail {

// Orders edge directions by angle in (-pi/2, 3pi/2], the range swept when a
// convex polygon is walked counterclockwise from its lexicographically
// smallest vertex.
inline int direction_half(const LatticePoint& d) { return (d.x > 0 || (d.x == 0 && d.y > 0)) ? 0 : 1; }

inline bool angle_less(const LatticePoint& a, const LatticePoint& b) {
  const int ha = direction_half(a), hb = direction_half(b);
  if (ha != hb) return ha < hb;
  return cross(a, b) > 0;
}

inline std::vector<LatticePoint> edges_of(const std::vector<LatticePoint>& v) {
  std::vector<LatticePoint> e;
  if (v.size() < 2) return e;
  for (std::size_t i = 0; i < v.size(); ++i) e.push_back(v[(i + 1) % v.size()] - v[i]);
  return e;
}

}  // namespace detail

/// Minkowski sum by merging the two edge sequences in angular order.
inline LatticePolytope minkowski_sum(const LatticePolytope& p, const LatticePolytope& q) {
  const auto& pv = p.vertices();
  const auto& qv = q.vertices();
  if (pv.empty() || qv.empty()) throw Error("Minkowski sum with an empty polytope");
  const auto pe = detail::edges_of(pv);
  const auto qe = detail::edges_of(qv);
  std::vector<LatticePoint> out;
  LatticePoint cur = pv.front() + qv.front();
  out.push_back(cur);
  std::size_t i = 0, j = 0;
  while (i < pe.size() || j < qe.size()) {
    LatticePoint step;
    if (j == qe.size() || (i < pe.size() && detail::angle_less(pe[i], qe[j]))) {
      step = pe[i++];
    } else if (i == pe.size() || detail::angle_less(qe[j], pe[i])) {
      step = qe[j++];
    } else {
      step = pe[i++] + qe[j++];  // parallel edges merge into one
    }
    cur = cur + step;
    out.push_back(cur);
  }
  if (out.size() > 1) out.pop_back();  // back at the start
  // Edges of a convex polygon never repeat a direction, but a point summand
  // contributes none; drop any collinear middle vertices all the same.
  std::vector<LatticePoint> pruned;
  const std::size_t n = out.size();
  for (std::size_t k = 0; k < n; ++k) {
    if (n <= 2) {
      pruned = out;
      break;
    }
    const LatticePoint prev = out[(k + n - 1) % n], here = out[k], next = out[(k + 1) % n];
    if (cross(here - prev, next - here) != 0) pruned.push_back(here);
  }
  return LatticePolytope::hull(pruned.empty() ? out : pruned);
}

inline std::vector<LatticePoint> support_points(const TorusCurve& f) {
  std::vector<LatticePoint> pts;
  for (const auto& [e, c] : f.terms()) pts.push_back(e);
  return pts;
}

/// Exponent pairs carrying a nonzero coefficient.
inline std::set<LatticePoint> support(const TorusCurve& f) {
  const auto pts = support_points(f);
  return {pts.begin(), pts.end()};
}

/// Rank, fullness and a Hermite-style basis of the lattice spanned by pairwise differences.
inline LatticeInfo difference_lattice(const std::vector<LatticePoint>& points) {
  LatticeInfo info;
  if (points.size() <= 1) return info;
  // pivot = (a, b) with a > 0 spans the first coordinates; (0, c) the rest.
  bool have_pivot = false;
  long a = 0, b = 0, c = 0;
  for (std::size_t k = 1; k < points.size(); ++k) {
    LatticePoint v = points[k] - points[0];
    if (v.x == 0) {
      c = std::gcd(c, v.y);
      continue;
    }
    if (v.x < 0) v = v * -1;
    if (!have_pivot) {
      a = v.x;
      b = v.y;
      have_pivot = true;
      continue;
    }
    // extended Euclid on (a, v.x)
    long r0 = a, r1 = v.x, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
    while (r1 != 0) {
      const long q = r0 / r1;
      std::tie(r0, r1) = std::pair{r1, r0 - q * r1};
      std::tie(s0, s1) = std::pair{s1, s0 - q * s1};
      std::tie(t0, t1) = std::pair{t1, t0 - q * t1};
    }
    const long g = r0;
    const long new_b = s0 * b + t0 * v.y;
    // (v.x/g)*(a,b) - (a/g)*(v.x, v.y) has zero first coordinate
    const long eliminated = (v.x / g) * b - (a / g) * v.y;
    c = std::gcd(c, eliminated);
    a = g;
    b = new_b;
  }
  c = std::abs(c);
  if (have_pivot) {
    if (c != 0) b = mod_floor(b, c);
    info.basis.push_back({a, b});
    info.rank = 1;
  }
  if (c != 0) {
    info.basis.push_back({0, c});
    ++info.rank;
  }
  info.full = info.rank == 2 && a * c == 1;
  return info;
}

inline LatticeInfo difference_lattice(const TorusCurve& f) { return difference_lattice(support_points(f)); }

inline LatticePolytope newton(const TorusCurve& f) { return LatticePolytope::hull(support_points(f)); }

/// Area(Newt f + Newt g) - Area(Newt f) - Area(Newt g). Coprimality is the caller's concern.
inline Rational toric_bezout_bound(const TorusCurve& f, const TorusCurve& g) {
  const auto p = newton(f), q = newton(g);
  return minkowski_sum(p, q).area() - p.area() - q.area();
}

/// Bezout number of the bidegree compactification in P^1 x P^1.
inline long bidegree_bezout_bound(const TorusCurve& f, const TorusCurve& g) {
  const auto df = f.bidegree(), dg = g.bidegree();
  return df.x * dg.y + dg.x * df.y;
}

}  // namespace cyclotorsion
