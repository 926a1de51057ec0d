#pragma once

// Möbius maps with cyclotomic coefficients, the subgroup H of maps that
// preserve the roots of unity, graph curves, translates, and the conjugate
// curve families used to trap every torsion point of a graph curve.

#include <optional>
#include <string>
#include <vector>

#include "cyclotorsion/cyclotomic.hpp"
#include "cyclotorsion/polytope.hpp"
#include "cyclotorsion/torus_curve.hpp"

namespace cyclotorsion {

/// x -> (a x + b) / (c x + d), normalized so the first nonzero of (a, b, c, d) is 1.
class MobiusMap {
 public:
  MobiusMap(CycloNum a, CycloNum b, CycloNum c, CycloNum d) {
    const CycloNum det = a * d - b * c;
    if (det.is_zero()) throw DegenerateMap("Möbius matrix has zero determinant");
    const CycloNum* first = !a.is_zero() ? &a : !b.is_zero() ? &b : &c;
    const CycloNum inv = first->inverse();
    a = a * inv, b = b * inv, c = c * inv, d = d * inv;
    level_ = checked_level_lcm(checked_level_lcm(a.level(), b.level()), checked_level_lcm(c.level(), d.level()));
    a_ = a.lift(level_), b_ = b.lift(level_), c_ = c.lift(level_), d_ = d.lift(level_);
  }

  static MobiusMap identity() { return MobiusMap(1, 0, 0, 1); }

  const CycloNum& a() const noexcept { return a_; }
  const CycloNum& b() const noexcept { return b_; }
  const CycloNum& c() const noexcept { return c_; }
  const CycloNum& d() const noexcept { return d_; }
  long level() const noexcept { return level_; }
  CycloNum determinant() const { return a_ * d_ - b_ * c_; }

  /// this ∘ other, i.e. x -> this(other(x)).
  MobiusMap operator*(const MobiusMap& o) const {
    return MobiusMap(a_ * o.a_ + b_ * o.c_, a_ * o.b_ + b_ * o.d_, c_ * o.a_ + d_ * o.c_, c_ * o.b_ + d_ * o.d_);
  }

  MobiusMap inverse() const { return MobiusMap(d_, -b_, -c_, a_); }

  /// Image of a finite point; nullopt when it is sent to infinity.
  std::optional<CycloNum> operator()(const CycloNum& x) const {
    const CycloNum den = c_ * x + d_;
    if (den.is_zero()) return std::nullopt;
    return (a_ * x + b_) / den;
  }

  friend bool operator==(const MobiusMap& p, const MobiusMap& q) {
    return p.a_ == q.a_ && p.b_ == q.b_ && p.c_ == q.c_ && p.d_ == q.d_;
  }

 private:
  CycloNum a_, b_, c_, d_;
  long level_ = 1;
};

inline MobiusMap mobius_new(const CycloNum& a, const CycloNum& b, const CycloNum& c, const CycloNum& d) {
  return MobiusMap(a, b, c, d);
}

/// Membership in H = < zeta x, 1/x : zeta a root of unity >.
inline bool in_H(const MobiusMap& g) {
  if (g.b().is_zero() && g.c().is_zero()) return as_root_of_unity(g.a() / g.d()).has_value();
  if (g.a().is_zero() && g.d().is_zero()) return as_root_of_unity(g.b() / g.c()).has_value();
  return false;
}

/// The curve (a x + b) - (c x + d) y of pairs (x, g(x)).
inline TorusCurve graph_curve(const MobiusMap& g) {
  TorusCurve::Terms terms;
  terms.emplace(LatticePoint{1, 0}, g.a());
  terms.emplace(LatticePoint{0, 0}, g.b());
  terms.emplace(LatticePoint{1, 1}, -g.c());
  terms.emplace(LatticePoint{0, 1}, -g.d());
  return TorusCurve(std::move(terms));
}

/// The translate (z1, z2) . {f = 0} = {f(x / z1, y / z2) = 0}.
/// A point (x, y) lies on f iff (z1 x, z2 y) lies on the result.
inline TorusCurve translate_curve(const TorusCurve& f, const RootOfUnity& z1, const RootOfUnity& z2) {
  TorusCurve::Terms out;
  for (const auto& [e, c] : f.terms()) {
    const RootOfUnity shift = z1.pow(-e.x) * z2.pow(-e.y);
    out.emplace(e, c * CycloNum::from_root(shift));
  }
  return TorusCurve(std::move(out));
}

struct MinimalTranslate {
  TorusCurve curve;     // translate_curve(f, x_shift, y_shift), expressed at `conductor`
  RootOfUnity x_shift;  // z1
  RootOfUnity y_shift;  // z2
  long conductor = 1;   // N, the level of the translate's coefficient field
};

/// Default translate search modulus 2 * lcm(level, 4).
inline long default_translate_modulus(const TorusCurve& f) { return 2 * std::lcm(f.level(), 4L); }

/// Among translates by roots of unity of order dividing `modulus` (0 selects
/// the default), finds one whose normalized coefficients generate Q(zeta_N)
/// with N as small as possible. Ties go to the lexicographically smallest
/// pair of exponents, so the identity translate wins whenever it is minimal.
///
/// A translate by (zeta_D^k1, zeta_D^k2) multiplies the normalized
/// coefficient r_q at exponent q by zeta_D^-m with m = k1 dx + k2 dy, where
/// (dx, dy) is q minus the leading exponent. That product lies in Q(zeta_N')
/// iff every generator s_e of Gal(Q(zeta_L)/Q(zeta_N')) fixes it, i.e. iff
/// s_e(r_q) / r_q = zeta_D^((e - 1) m). The left side does not depend on the
/// translate, so each candidate N' reduces to integer congruences in (k1, k2).
inline MinimalTranslate minimal_translate(const TorusCurve& f, long modulus = 0) {
  const LatticeInfo lattice = difference_lattice(f);
  if (lattice.rank != 2) {
    throw RankError("minimal_translate needs a rank-2 difference lattice; rank " + std::to_string(lattice.rank) +
                    " curves are handled as sub-torus translates");
  }
  const long d = modulus > 0 ? modulus : default_translate_modulus(f);
  const long l = checked_level_lcm(f.level(), d);
  const long step = l / d;  // zeta_D = zeta_L^step

  struct Ratio {
    LatticePoint offset;
    CycloNum value;
    CycloNum inverse;
  };
  std::vector<Ratio> ratios;
  const LatticePoint lead = f.terms().begin()->first;
  for (auto it = std::next(f.terms().begin()); it != f.terms().end(); ++it) {
    const CycloNum v = it->second.lift(l);
    ratios.push_back({it->first - lead, v, v.inverse()});
  }

  for (long target : divisors(l)) {
    if (target % 4 == 2) continue;
    const auto gens = detail::generators_of(detail::relative_galois_group(l, target), l);
    // (coefficient on m, required residue): (e - 1) * step * m = w (mod L)
    struct Congruence {
      LatticePoint offset;
      long factor;
      long residue;
    };
    std::vector<Congruence> constraints;
    bool feasible = true;
    for (const auto& r : ratios) {
      for (long e : gens) {
        const CycloNum u = GaloisMap(l, e)(r.value) * r.inverse;
        const auto root = as_root_of_unity(u);
        if (!root || l % root->order() != 0) {
          feasible = false;
          break;
        }
        constraints.push_back({r.offset, mod_floor((e - 1) * step, l), root->exponent_at(l)});
      }
      if (!feasible) break;
    }
    if (!feasible) continue;
    for (long k1 = 0; k1 < d; ++k1) {
      for (long k2 = 0; k2 < d; ++k2) {
        bool ok = true;
        for (const auto& c : constraints) {
          const __int128 m = static_cast<__int128>(k1) * c.offset.x + static_cast<__int128>(k2) * c.offset.y;
          const __int128 lhs = (static_cast<__int128>(c.factor) * m) % l;
          if (((lhs % l) + l) % l != c.residue) {
            ok = false;
            break;
          }
        }
        if (!ok) continue;
        const RootOfUnity z1 = RootOfUnity::of(d, k1), z2 = RootOfUnity::of(d, k2);
        return MinimalTranslate{translate_curve(f, z1, z2).at_level(target), z1, z2, target};
      }
    }
  }
  throw Error("internal: translate search found no level");  // unreachable: N' = L always succeeds
}

enum class CaseTag { ii, iii, iv, v };

inline std::string to_string(CaseTag c) {
  switch (c) {
    case CaseTag::ii: return "ii";
    case CaseTag::iii: return "iii";
    case CaseTag::iv: return "iv";
    case CaseTag::v: return "v";
  }
  return "?";
}

struct FamilyMember {
  std::string label;
  TorusCurve curve;
};

struct ConjugateFamily {
  CaseTag case_tag;
  GaloisMap twist;  // sigma (cases iii, iv) or tau (case v)
  std::vector<FamilyMember> members;
};

/// Sign and square twists of a minimal translate f over Q(zeta_N):
///   N = 1 (case iii):   f(x,-y), f(-x,y), f(-x,-y), f(+-x^2, +-y^2)
///   N odd (case iv):    same, with the squared members built from f^s, s: zeta_N -> zeta_N^2
///   4 | N (case v):     f1, f2, f3 and their images under t: zeta_N -> -zeta_N
/// Every torsion point of f lies on some member.
inline ConjugateFamily conjugate_family(const TorusCurve& f, long n,
                                        std::optional<GaloisMap> point_context = std::nullopt) {
  if (n < 1) throw Error("conjugate_family needs a positive level");
  if (n % 4 == 2) {
    throw Error("level " + std::to_string(n) + " is 2 mod 4, so the curve is not a minimal translate");
  }
  if (n % f.level() != 0) throw Error("curve coefficients do not lie in Q(zeta_N)");
  const TorusCurve base = f.level() == n ? f : f.at_level(n);
  ConjugateFamily fam{CaseTag::iii, GaloisMap::identity(n), {}};
  auto& m = fam.members;
  m.push_back({"f1", base.substitute(1, -1, 1)});
  m.push_back({"f2", base.substitute(-1, 1, 1)});
  m.push_back({"f3", base.substitute(-1, -1, 1)});
  if (n % 4 == 0) {
    fam.case_tag = CaseTag::v;
    fam.twist = GaloisMap(n, 1 + n / 2);
    if (point_context) {
      if (point_context->level() != n || point_context->exponent() % n != fam.twist.exponent()) {
        throw InvalidGaloisMap("case (v) twist must act as zeta_N -> -zeta_N");
      }
    }
    const TorusCurve twisted = base.galois(fam.twist);
    m.push_back({"f^tau", twisted});
    m.push_back({"f1^tau", twisted.substitute(1, -1, 1)});
    m.push_back({"f2^tau", twisted.substitute(-1, 1, 1)});
    m.push_back({"f3^tau", twisted.substitute(-1, -1, 1)});
  } else {
    if (n > 1) {
      fam.case_tag = CaseTag::iv;
      fam.twist = GaloisMap(n, 2);
    }
    const TorusCurve twisted = base.galois(fam.twist);
    m.push_back({"f4", twisted.substitute(1, 1, 2)});
    m.push_back({"f5", twisted.substitute(1, -1, 2)});
    m.push_back({"f6", twisted.substitute(-1, 1, 2)});
    m.push_back({"f7", twisted.substitute(-1, -1, 2)});
  }
  for (const auto& member : m) {
    if (member.curve == base) {
      throw CommonComponent("family member " + member.label + " is a scalar multiple of the curve");
    }
  }
  return fam;
}

}  // namespace cyclotorsion
