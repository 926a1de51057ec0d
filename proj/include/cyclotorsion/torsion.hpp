#pragma once

// Torsion points on curves in the two-torus: exact intersection of two
// curves, complete enumeration through conjugate families, uniform bounds,
// per-member distribution tables and a brute-force oracle.

#include <atomic>
#include <complex>
#include <exception>
#include <numbers>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "cyclotorsion/curves.hpp"
#include "cyclotorsion/elimination.hpp"
#include "cyclotorsion/kpoly.hpp"
#include "cyclotorsion/polytope.hpp"

namespace cyclotorsion {

struct ExecutionOptions {
  unsigned threads = 1;
  long translate_modulus = 0;  // 0: default search modulus
};

namespace detail {

/// Runs fn(0..count-1) on up to `threads` workers. Rethrows the exception of
/// the lowest failing index, so failures do not depend on scheduling.
template <class Fn>
void parallel_for(std::size_t count, unsigned threads, Fn fn) {
  if (threads <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  const unsigned n = static_cast<unsigned>(std::min<std::size_t>(threads, count));
  for (unsigned t = 0; t < n; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          fn(i);
        } catch (...) {
          errors[i] = std::current_exception();
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace detail

/// A pair of roots of unity, ordered by joint order n = lcm(ord x, ord y), then exponents.
struct TorsionPoint {
  RootOfUnity x;
  RootOfUnity y;

  static TorsionPoint joint(long n, long j, long k) { return {RootOfUnity::of(n, j), RootOfUnity::of(n, k)}; }

  long order() const { return std::lcm(x.order(), y.order()); }
  long x_exp() const { return x.exponent_at(order()); }
  long y_exp() const { return y.exponent_at(order()); }

  friend bool operator==(const TorsionPoint&, const TorsionPoint&) = default;
  friend std::strong_ordering operator<=>(const TorsionPoint& a, const TorsionPoint& b) {
    if (auto c = a.order() <=> b.order(); c != 0) return c;
    if (auto c = a.x_exp() <=> b.x_exp(); c != 0) return c;
    return a.y_exp() <=> b.y_exp();
  }
};

inline void sort_unique(std::vector<TorsionPoint>& pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
}

struct Intersection {
  std::vector<TorsionPoint> torsion;
  long nontorsion = 0;  // -1 when not requested
};

namespace detail {

inline KPoly column(const BiPoly& p, bool x_axis) {
  std::vector<CycloNum> c;
  if (x_axis) {
    for (long i = 0; i <= p.deg_x(); ++i) c.push_back(p.at(i, 0));
  } else {
    for (long j = 0; j <= p.deg_y(); ++j) c.push_back(p.at(0, j));
  }
  return KPoly(std::move(c));
}

inline long axis_common_roots(const BiPoly& f, const BiPoly& g, bool x_axis) {
  const KPoly h = gcd(column(f, x_axis), column(g, x_axis));
  return h.degree() <= 0 ? 0 : distinct_root_count(h);
}

}  // namespace detail

/// Common zeros of f and g with both coordinates nonzero: the torsion ones
/// exactly, the others counted as distinct points.
inline Intersection intersect(const TorusCurve& f, const TorusCurve& g, bool count_nontorsion = true) {
  const BiPoly bf = BiPoly::from_curve(f), bg = BiPoly::from_curve(g);
  const KPoly p = resultant_y(bf, bg);
  if (p.is_zero() || resultant_x(bf, bg).is_zero()) throw CommonComponent("curves share a component");
  Intersection out;
  for (const RootOfUnity& x0 : roots_of_unity(p)) {
    const KPoly a = bf.specialize_x(x0), b = bg.specialize_x(x0);
    if (a.is_zero() && b.is_zero()) throw CommonComponent("both curves contain a vertical line");
    const KPoly h = a.is_zero() ? b : b.is_zero() ? a : gcd(a, b);
    if (h.degree() <= 0) continue;
    for (const RootOfUnity& y0 : roots_of_unity(h)) out.torsion.push_back({x0, y0});
  }
  sort_unique(out.torsion);
  if (!count_nontorsion) {
    out.nontorsion = -1;
    return out;
  }
  long torus = count_affine_intersections(bf, bg).points;
  torus -= detail::axis_common_roots(bf, bg, true);
  torus -= detail::axis_common_roots(bf, bg, false);
  if (bf.at(0, 0).is_zero() && bg.at(0, 0).is_zero()) ++torus;  // origin was removed twice
  out.nontorsion = torus - static_cast<long>(out.torsion.size());
  if (out.nontorsion < 0) throw Error("internal: torus count below torsion count");
  return out;
}

/// The curve contains the sub-torus translate x^m y^n = zeta (product form),
/// or x^m = zeta y^n when `product` is false.
struct InfiniteWitness {
  long m = 0;
  long n = 0;
  bool product = true;
  RootOfUnity zeta;

  std::string to_string() const {
    auto mono = [](const char* v, long k) -> std::string {
      if (k == 0) return "";
      return k == 1 ? std::string(v) : std::string(v) + "^" + std::to_string(k);
    };
    const std::string z = "zeta_" + std::to_string(zeta.order()) + "^" + std::to_string(zeta.exponent());
    if (product) {
      std::string lhs = mono("x", m);
      const std::string ys = mono("y", n);
      if (!lhs.empty() && !ys.empty()) lhs += "*";
      return lhs + ys + " - " + z;
    }
    return mono("x", m) + " - " + z + "*" + mono("y", n);
  }
};

struct EnumerationResult {
  CaseTag case_tag = CaseTag::ii;
  long conductor = 1;
  std::vector<TorsionPoint> points;  // empty when infinite
  std::optional<InfiniteWitness> witness;

  bool infinite() const { return witness.has_value(); }
};

namespace detail {

inline long coefficient_conductor(const TorusCurve& f) {
  long n = 1;
  for (const auto& [e, c] : f.terms()) n = std::lcm(n, conductor(c));
  return n;
}

/// Rank <= 1: f is a polynomial in a single monomial u; its torsion points
/// are infinite iff that polynomial has a root of unity.
inline EnumerationResult enumerate_low_rank(const TorusCurve& f, const LatticeInfo& info) {
  EnumerationResult r;
  r.case_tag = CaseTag::ii;
  r.conductor = coefficient_conductor(f);
  if (info.rank == 0) return r;
  const LatticePoint dir = info.basis[0];
  const LatticePoint p0 = f.terms().begin()->first;
  std::vector<CycloNum> coeffs;
  for (const auto& [e, c] : f.terms()) {
    const LatticePoint d = e - p0;
    const long k = dir.x != 0 ? d.x / dir.x : d.y / dir.y;
    if (static_cast<long>(coeffs.size()) <= k) coeffs.resize(k + 1, CycloNum::zero(f.level()));
    coeffs[k] = c;
  }
  const auto roots = roots_of_unity(KPoly(std::move(coeffs)));
  if (roots.empty()) return r;
  // sum c_k u^k = 0 at u = zeta; u = x^a y^b with (a, b) = dir
  InfiniteWitness w;
  w.zeta = roots.front();
  if (dir.y < 0) {
    w.product = false;
    w.m = dir.x;
    w.n = -dir.y;
  } else {
    w.m = dir.x;
    w.n = dir.y;
  }
  r.witness = w;
  return r;
}

struct Prepared {
  MinimalTranslate translate;
  ConjugateFamily family;
};

inline Prepared prepare(const TorusCurve& f, const ExecutionOptions& opt) {
  MinimalTranslate m = minimal_translate(f, opt.translate_modulus);
  ConjugateFamily fam = conjugate_family(m.curve, m.conductor);
  return {std::move(m), std::move(fam)};
}

inline TorsionPoint untranslate(const TorsionPoint& p, const MinimalTranslate& m) {
  return {p.x * m.x_shift.inverse(), p.y * m.y_shift.inverse()};
}

}  // namespace detail

/// All torsion points of {f = 0}, or a witness that there are infinitely many.
inline EnumerationResult enumerate_torsion(const TorusCurve& f, const ExecutionOptions& opt = {}) {
  const LatticeInfo info = difference_lattice(f);
  if (info.rank < 2) return detail::enumerate_low_rank(f, info);
  const auto prep = detail::prepare(f, opt);
  const auto& members = prep.family.members;
  std::vector<std::vector<TorsionPoint>> found(members.size());
  detail::parallel_for(members.size(), opt.threads, [&](std::size_t i) {
    found[i] = intersect(prep.translate.curve, members[i].curve, false).torsion;
  });
  EnumerationResult r;
  r.case_tag = prep.family.case_tag;
  r.conductor = prep.translate.conductor;
  for (const auto& list : found) {
    for (const auto& p : list) {
      const TorsionPoint q = detail::untranslate(p, prep.translate);
      if (f.vanishes_at(q.x, q.y)) r.points.push_back(q);
    }
  }
  sort_unique(r.points);
  return r;
}

struct MemberBound {
  std::string label;
  long bound = 0;
  std::string note;
};

struct BoundReport {
  CaseTag case_tag = CaseTag::ii;
  long minimal_n = 1;
  std::vector<MemberBound> members;
  long total = 0;
  bool infinite = false;
  std::vector<std::string> notes;
};

inline constexpr const char* kCaseOneNote =
    "coefficients outside cyclotomic fields (at most 4 torsion points) cannot be expressed in this input format";

/// Uniform bound on the number of torsion points, member by member.
inline BoundReport bound_torsion(const TorusCurve& f, const ExecutionOptions& opt = {}) {
  BoundReport rep;
  rep.notes.push_back(kCaseOneNote);
  const LatticeInfo info = difference_lattice(f);
  if (info.rank < 2) {
    const auto e = detail::enumerate_low_rank(f, info);
    rep.case_tag = CaseTag::ii;
    rep.minimal_n = e.conductor;
    rep.infinite = e.infinite();
    if (rep.infinite) rep.notes.push_back("contains the sub-torus translate " + e.witness->to_string());
    return rep;
  }
  const auto prep = detail::prepare(f, opt);
  rep.case_tag = prep.family.case_tag;
  rep.minimal_n = prep.translate.conductor;
  const TorusCurve& t = prep.translate.curve;
  const LatticePoint span = t.bidegree();
  const bool bilinear = span.x <= 1 && span.y <= 1;
  auto toric = [&](const TorusCurve& g) {
    const Rational b = toric_bezout_bound(t, g);
    if (b.get_den() != 1) throw Error("internal: non-integral mixed area");
    return b.get_num().get_si();
  };
  for (const auto& m : prep.family.members) {
    MemberBound mb{m.label, 0, ""};
    const bool sign_twist = m.label == "f1" || m.label == "f2";
    if (sign_twist && bilinear) {
      mb.note = "excluded: common zeros lie off the torus";
    } else if (sign_twist) {
      mb.bound = toric(m.curve);
      mb.note = "toric Bezout";
    } else if (m.label == "f3" || rep.case_tag == CaseTag::v) {
      mb.bound = bidegree_bezout_bound(t, m.curve);
      mb.note = "bidegree Bezout";
    } else {
      mb.bound = toric(m.curve);
      mb.note = "toric Bezout";
    }
    rep.total += mb.bound;
    rep.members.push_back(std::move(mb));
  }
  return rep;
}

struct DistributionRow {
  std::string label;
  std::vector<TorsionPoint> points;  // in the coordinates of the input curve
  long nontorsion = 0;
};

struct DistributionTable {
  CaseTag case_tag = CaseTag::iii;
  long conductor = 1;
  std::vector<DistributionRow> rows;
};

/// Where the torsion points fall among the conjugate family members.
inline DistributionTable distribute(const TorusCurve& f, const ExecutionOptions& opt = {}) {
  const LatticeInfo info = difference_lattice(f);
  if (info.rank < 2) {
    if (detail::enumerate_low_rank(f, info).infinite()) throw Error("infinitely many torsion points; no distribution");
    throw RankError("distribution tables need a rank-2 curve");
  }
  const auto prep = detail::prepare(f, opt);
  const auto& members = prep.family.members;
  DistributionTable table;
  table.case_tag = prep.family.case_tag;
  table.conductor = prep.translate.conductor;
  table.rows.resize(members.size());
  detail::parallel_for(members.size(), opt.threads, [&](std::size_t i) {
    const Intersection hit = intersect(prep.translate.curve, members[i].curve, true);
    DistributionRow row{members[i].label, {}, hit.nontorsion};
    for (const auto& p : hit.torsion) row.points.push_back(detail::untranslate(p, prep.translate));
    sort_unique(row.points);
    table.rows[i] = std::move(row);
  });
  return table;
}

/// Every (zeta_n^j, zeta_n^k) with n <= max_order on the curve. A double
/// precision pass discards pairs whose value is far above its rounding error;
/// the rest are decided exactly.
inline std::vector<TorsionPoint> brute_force_torsion(const TorusCurve& f, long max_order, unsigned threads = 1) {
  if (max_order < 1) throw Error("max_order must be positive");
  struct Term {
    long i, j;
    std::complex<double> c;
  };
  std::vector<Term> terms;
  double scale = 1.0;
  for (const auto& [e, c] : f.terms()) {
    terms.push_back({e.x, e.y, c.to_complex()});
    for (const auto& v : c.coords()) scale += std::abs(v.get_d());
  }
  // rounding error is below 1e-13 * scale for these sizes; keep a wide margin
  const double tol = 1e-7 * scale;
  std::vector<std::vector<TorsionPoint>> per_order(max_order + 1);
  detail::parallel_for(static_cast<std::size_t>(max_order), threads, [&](std::size_t idx) {
    const long n = static_cast<long>(idx) + 1;
    std::vector<std::complex<double>> table(n);
    for (long k = 0; k < n; ++k) table[k] = std::polar(1.0, 2 * std::numbers::pi * static_cast<double>(k) / n);
    std::vector<std::pair<long, long>> exps;
    for (const auto& t : terms) exps.emplace_back(mod_floor(t.i, n), mod_floor(t.j, n));
    auto& out = per_order[n];
    for (long j = 0; j < n; ++j) {
      const long gj = std::gcd(j, n);
      for (long k = 0; k < n; ++k) {
        if (std::gcd(gj, k) != 1) continue;
        std::complex<double> v{0, 0};
        for (std::size_t t = 0; t < terms.size(); ++t) v += terms[t].c * table[(exps[t].first * j + exps[t].second * k) % n];
        if (std::abs(v) > tol) continue;
        const TorsionPoint p = TorsionPoint::joint(n, j, k);
        if (f.vanishes_at(p.x, p.y)) out.push_back(p);
      }
    }
  });
  std::vector<TorsionPoint> all;
  for (auto& v : per_order) all.insert(all.end(), v.begin(), v.end());
  sort_unique(all);
  return all;
}

struct ConjugacyWitness {
  int sign = 1;
  bool square = false;

  /// sign * zeta^(square ? 2 : 1)
  RootOfUnity apply(const RootOfUnity& zeta) const {
    RootOfUnity r = square ? zeta.pow(2) : zeta;
    return sign < 0 ? r * RootOfUnity::of(2, 1) : r;
  }
};

/// A Galois conjugate of zeta_N of the form +-zeta_N or +-zeta_N^2:
/// N odd: zeta_N^2; N = 2 mod 4: -zeta_N^2; 4 | N: -zeta_N.
inline ConjugacyWitness conjugacy_witness(long n) {
  if (n < 1) throw Error("conjugacy_witness needs N >= 1");
  if (n % 2 == 1) return {1, true};
  if (n % 4 == 2) return {-1, true};
  return {-1, false};
}

}  // namespace cyclotorsion
