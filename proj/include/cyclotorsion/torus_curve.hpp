#pragma once

#include <compare>
#include <complex>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "cyclotorsion/cyclotomic.hpp"

namespace cyclotorsion {

/// An integer exponent pair (i, j), also used as a lattice point in polytope code.
struct LatticePoint {
  long x = 0;
  long y = 0;

  auto operator<=>(const LatticePoint&) const = default;
  LatticePoint operator+(const LatticePoint& o) const { return {x + o.x, y + o.y}; }
  LatticePoint operator-(const LatticePoint& o) const { return {x - o.x, y - o.y}; }
  LatticePoint operator*(long k) const { return {x * k, y * k}; }
};

inline long cross(const LatticePoint& a, const LatticePoint& b) { return a.x * b.y - a.y * b.x; }

/// A Laurent polynomial in x, y with coefficients in one cyclotomic field.
///
/// Stored normalized: no zero coefficients, all coefficients at the curve's
/// level, and the coefficient of the lexicographically smallest exponent pair
/// equal to 1. Two curves with the same zero set and support are therefore equal.
class TorusCurve {
 public:
  using Terms = std::map<LatticePoint, CycloNum>;

  explicit TorusCurve(Terms terms) {
    for (auto it = terms.begin(); it != terms.end();) {
      it = it->second.is_zero() ? terms.erase(it) : std::next(it);
    }
    if (terms.empty()) throw Error("a torus curve needs at least one nonzero term");
    long level = 1;
    for (const auto& [e, c] : terms) level = checked_level_lcm(level, c.level());
    const CycloNum inv = terms.begin()->second.inverse();
    for (auto& [e, c] : terms) {
      c = c * inv;
      if (c.level() != level) c = c.lift(level);
    }
    level_ = level;
    terms_ = std::move(terms);
  }

  long level() const noexcept { return level_; }
  const Terms& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }

  CycloNum coefficient(const LatticePoint& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? CycloNum::zero(level_) : it->second;
  }

  LatticePoint min_exponent() const {
    LatticePoint m = terms_.begin()->first;
    for (const auto& [e, c] : terms_) {
      m.x = std::min(m.x, e.x);
      m.y = std::min(m.y, e.y);
    }
    return m;
  }

  LatticePoint max_exponent() const {
    LatticePoint m = terms_.begin()->first;
    for (const auto& [e, c] : terms_) {
      m.x = std::max(m.x, e.x);
      m.y = std::max(m.y, e.y);
    }
    return m;
  }

  /// Degrees in x and in y of the polynomial obtained by clearing the Laurent denominators.
  LatticePoint bidegree() const { return max_exponent() - min_exponent(); }

  /// f(x, y) for nonzero field elements x, y.
  CycloNum evaluate(const CycloNum& x, const CycloNum& y) const {
    CycloNum sum = CycloNum::zero(level_);
    for (const auto& [e, c] : terms_) sum += c * x.pow(e.x) * y.pow(e.y);
    return sum;
  }

  /// f(x, y) at a pair of roots of unity, computed at level lcm(level, ord x, ord y).
  CycloNum evaluate(const RootOfUnity& x, const RootOfUnity& y) const {
    const long l = checked_level_lcm(checked_level_lcm(level_, x.order()), y.order());
    const long ex = x.exponent_at(l), ey = y.exponent_at(l);
    PowerSum s(l);
    for (const auto& [e, c] : terms_) {
      const __int128 shift = static_cast<__int128>(ex) * e.x + static_cast<__int128>(ey) * e.y;
      s.add(c, static_cast<long>(((shift % l) + l) % l));
    }
    return std::move(s).finish();
  }

  bool vanishes_at(const RootOfUnity& x, const RootOfUnity& y) const { return evaluate(x, y).is_zero(); }

  /// Floating-point shadow of f at complex arguments. Cross-checks only.
  std::complex<double> evaluate_complex(std::complex<double> x, std::complex<double> y) const {
    std::complex<double> sum{0, 0};
    for (const auto& [e, c] : terms_) sum += c.to_complex() * std::pow(x, e.x) * std::pow(y, e.y);
    return sum;
  }

  /// Coefficient-wise image under a Galois map whose level is a multiple of level().
  TorusCurve galois(const GaloisMap& s) const {
    Terms out;
    for (const auto& [e, c] : terms_) out.emplace(e, s(c));
    return TorusCurve(std::move(out));
  }

  /// f(sx * x^p, sy * y^p) for signs sx, sy in {+1, -1} and a positive power p.
  TorusCurve substitute(int sign_x, int sign_y, long power) const {
    Terms out;
    for (const auto& [e, c] : terms_) {
      const bool flip = ((sign_x < 0) && (e.x % 2 != 0)) != ((sign_y < 0) && (e.y % 2 != 0));
      out.emplace(e * power, flip ? -c : c);
    }
    return TorusCurve(std::move(out));
  }

  /// The same curve with every coefficient expressed at `level`, which must contain them all.
  TorusCurve at_level(long level) const {
    Terms out;
    for (const auto& [e, c] : terms_) {
      if (level % c.level() == 0) out.emplace(e, c.lift(level));
      else out.emplace(e, restrict_to_level(c, level));
    }
    TorusCurve r(std::move(out));
    r.level_ = level;
    for (auto& [e, c] : r.terms_) {
      if (c.level() != level) c = c.lift(level);
    }
    return r;
  }

  friend bool operator==(const TorusCurve& a, const TorusCurve& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    auto ia = a.terms_.begin();
    for (auto ib = b.terms_.begin(); ib != b.terms_.end(); ++ia, ++ib) {
      if (ia->first != ib->first || !(ia->second == ib->second)) return false;
    }
    return true;
  }

  /// Renders e.g. "1 + (z^2 - z^6)*x - x*y" with `symbol` standing for zeta_level.
  std::string to_string(const std::string& symbol = "z") const {
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      std::string mono;
      auto append = [&mono](const char* v, long k) {
        if (k == 0) return;
        if (!mono.empty()) mono += "*";
        mono += v;
        if (k != 1) mono += "^" + std::to_string(k);
      };
      append("x", e.x);
      append("y", e.y);
      if (!first) out << " + ";
      first = false;
      if (mono.empty()) out << "(" << c.to_string(symbol) << ")";
      else if (c.is_one()) out << mono;
      else out << "(" << c.to_string(symbol) << ")*" << mono;
    }
    return out.str();
  }

 private:
  Terms terms_;
  long level_ = 1;
};

}  // namespace cyclotorsion
