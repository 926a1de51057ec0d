#pragma once

// Exact arithmetic in cyclotomic fields Q(zeta_N).
//
// An element is stored at an explicit level N as its rational coordinates in
// the power basis 1, zeta_N, ..., zeta_N^(phi(N)-1), i.e. reduced modulo the
// N-th cyclotomic polynomial. Levels are not minimized automatically; use
// conductor_reduce() for that. Binary operations on different levels work at
// the lcm of the two levels, capped by level_limit().

#include <compare>
#include <complex>
#include <cstdint>
#include <numbers>
#include <optional>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "cyclotorsion/arith.hpp"
#include "cyclotorsion/qpoly.hpp"

namespace cyclotorsion {

/// A root of unity zeta_n^k kept in canonical form gcd(k, n) = 1 (the identity is (1, 0)).
class RootOfUnity {
 public:
  RootOfUnity() = default;

  static RootOfUnity of(long n, long k) {
    if (n < 1) throw Error("root of unity needs a positive order");
    k = mod_floor(k, n);
    const long g = std::gcd(k, n);
    RootOfUnity r;
    r.order_ = n / g;
    r.exponent_ = k / g;
    return r;
  }

  long order() const noexcept { return order_; }
  long exponent() const noexcept { return exponent_; }
  bool is_one() const noexcept { return order_ == 1; }

  /// Exponent of this root relative to zeta_m, for m a multiple of order().
  long exponent_at(long m) const {
    if (m % order_ != 0) throw Error("level is not a multiple of the root's order");
    return exponent_ * (m / order_);
  }

  RootOfUnity operator*(const RootOfUnity& o) const {
    const long m = std::lcm(order_, o.order_);
    return of(m, exponent_at(m) + o.exponent_at(m));
  }
  RootOfUnity inverse() const { return of(order_, -exponent_); }
  RootOfUnity pow(long e) const {
    // exponent * e can overflow only for absurd inputs; reduce first.
    return of(order_, static_cast<long>((static_cast<__int128>(exponent_) * mod_floor(e, order_)) % order_));
  }

  auto operator<=>(const RootOfUnity&) const = default;

  friend std::ostream& operator<<(std::ostream& os, const RootOfUnity& r) {
    return os << "zeta_" << r.order_ << "^" << r.exponent_;
  }

 private:
  long order_ = 1;
  long exponent_ = 0;
};

class CycloNum;

namespace detail {

/// Reduces a polynomial in zeta_level (any length) modulo Phi_level, in place.
inline void reduce_mod_cyclotomic(long level, std::vector<Rational>& buf) {
  const auto& phi_poly = cyclotomic_polynomial(level);
  const long d = static_cast<long>(phi_poly.size()) - 1;
  std::vector<std::pair<long, long>> terms;
  for (long i = 0; i < d; ++i) {
    if (phi_poly[i] != 0) terms.emplace_back(i, phi_poly[i]);
  }
  Rational t;
  for (long k = static_cast<long>(buf.size()) - 1; k >= d; --k) {
    if (buf[k] == 0) continue;
    const long base = k - d;
    for (const auto& [i, c] : terms) {
      t = buf[k] * c;
      buf[base + i] -= t;
    }
    buf[k] = 0;
  }
  buf.resize(d, Rational(0));
}

/// Integer coordinates of zeta_level^k for k = 0, 1, 2, ..., produced incrementally.
class MonomialWalker {
 public:
  explicit MonomialWalker(long level)
      : phi_poly_(cyclotomic_polynomial(level)), cur_(phi_poly_.size() - 1, 0) {
    cur_[0] = 1;
  }
  const std::vector<long>& current() const { return cur_; }
  void advance() {
    const long d = static_cast<long>(cur_.size());
    const long top = cur_[d - 1];
    for (long i = d - 1; i > 0; --i) cur_[i] = cur_[i - 1];
    cur_[0] = 0;
    if (top != 0) {
      for (long i = 0; i < d; ++i) cur_[i] -= top * phi_poly_[i];
    }
  }

 private:
  const std::vector<long>& phi_poly_;
  std::vector<long> cur_;
};

}  // namespace detail

/// An exact element of the cyclotomic field Q(zeta_N).
class CycloNum {
 public:
  CycloNum() : level_(1), coords_{Rational(0)} {}
  CycloNum(long v) : level_(1), coords_{Rational(v)} {}  // NOLINT: implicit rational embedding
  CycloNum(const Rational& v) : level_(1), coords_{v} {}  // NOLINT

  static CycloNum zero(long level) {
    CycloNum z;
    z.level_ = level;
    z.coords_.assign(euler_phi(level), Rational(0));
    return z;
  }

  /// Builds the element sum poly[i] * zeta_level^i, reducing as needed.
  static CycloNum from_power_sum(long level, std::vector<Rational> poly) {
    if (level < 1) throw Error("level must be positive");
    if (level > level_limit()) throw LevelOverflow("level " + std::to_string(level) + " exceeds the limit");
    detail::reduce_mod_cyclotomic(level, poly);
    CycloNum x;
    x.level_ = level;
    x.coords_ = std::move(poly);
    return x;
  }

  /// zeta_level^k.
  static CycloNum zeta(long level, long k = 1) {
    k = mod_floor(k, level);
    std::vector<Rational> buf(k + 1, Rational(0));
    buf[k] = 1;
    return from_power_sum(level, std::move(buf));
  }

  static CycloNum from_root(const RootOfUnity& r) { return zeta(r.order(), r.exponent()); }

  long level() const noexcept { return level_; }
  const std::vector<Rational>& coords() const noexcept { return coords_; }

  bool is_zero() const {
    for (const auto& c : coords_)
      if (c != 0) return false;
    return true;
  }

  bool is_rational() const {
    for (std::size_t i = 1; i < coords_.size(); ++i)
      if (coords_[i] != 0) return false;
    return true;
  }

  bool is_one() const { return is_rational() && coords_[0] == 1; }

  /// Same element expressed at a level that is a multiple of level().
  CycloNum lift(long level) const;

  CycloNum inverse() const;
  CycloNum pow(long e) const;

  CycloNum operator-() const {
    CycloNum r = *this;
    for (auto& c : r.coords_) c = -c;
    return r;
  }

  friend CycloNum operator+(const CycloNum& a, const CycloNum& b);
  friend CycloNum operator-(const CycloNum& a, const CycloNum& b);
  friend CycloNum operator*(const CycloNum& a, const CycloNum& b);
  friend CycloNum operator/(const CycloNum& a, const CycloNum& b) { return a * b.inverse(); }
  CycloNum& operator+=(const CycloNum& o) { return *this = *this + o; }
  CycloNum& operator-=(const CycloNum& o) { return *this = *this - o; }
  CycloNum& operator*=(const CycloNum& o) { return *this = *this * o; }
  CycloNum& operator/=(const CycloNum& o) { return *this = *this / o; }

  friend bool operator==(const CycloNum& a, const CycloNum& b);

  /// Floating-point shadow value with zeta_N = exp(2 pi i / N). Cross-checks only.
  std::complex<double> to_complex() const {
    std::complex<double> sum{0.0, 0.0};
    for (std::size_t m = 0; m < coords_.size(); ++m) {
      if (coords_[m] == 0) continue;
      const double angle = 2.0 * std::numbers::pi * static_cast<double>(m) / static_cast<double>(level_);
      sum += coords_[m].get_d() * std::polar(1.0, angle);
    }
    return sum;
  }

  /// Renders the element as an expression in `symbol` = zeta_level, e.g. "-z^7 - z^6 + z^2".
  std::string to_string(const std::string& symbol = "z") const {
    std::ostringstream out;
    bool first = true;
    for (std::size_t m = 0; m < coords_.size(); ++m) {
      const Rational& c = coords_[m];
      if (c == 0) continue;
      const bool negative = c < 0;
      const Rational mag = abs(c);
      if (first) {
        if (negative) out << "-";
      } else {
        out << (negative ? " - " : " + ");
      }
      first = false;
      if (m == 0) {
        out << mag.get_str();
        continue;
      }
      if (mag != 1) out << mag.get_str() << "*";
      out << symbol;
      if (m > 1) out << "^" << m;
    }
    if (first) out << "0";
    return out.str();
  }

  friend std::ostream& operator<<(std::ostream& os, const CycloNum& x) {
    return os << x.to_string() << " @ level " << x.level_;
  }

 private:
  long level_;
  std::vector<Rational> coords_;
};

/// Accumulates sums of c * zeta_L^e at a fixed level L and reduces once at the end.
class PowerSum {
 public:
  explicit PowerSum(long level) : level_(level), buf_(level, Rational(0)) {
    if (level > level_limit()) throw LevelOverflow("level " + std::to_string(level) + " exceeds the limit");
  }

  long level() const noexcept { return level_; }

  void add(long exponent, const Rational& c) { buf_[mod_floor(exponent, level_)] += c; }

  /// Adds x * zeta_L^shift, where level(x) divides L.
  void add(const CycloNum& x, long shift = 0) {
    if (level_ % x.level() != 0) throw Error("PowerSum level is not a multiple of the operand level");
    const long step = level_ / x.level();
    const auto& c = x.coords();
    shift = mod_floor(shift, level_);
    for (std::size_t m = 0; m < c.size(); ++m) {
      if (c[m] == 0) continue;
      long e = static_cast<long>(m) * step + shift;
      if (e >= level_) e -= level_;
      buf_[e] += c[m];
    }
  }

  /// Adds x * zeta_L^shift, negated.
  void sub(const CycloNum& x, long shift = 0) { add(-x, shift); }

  CycloNum finish() && { return CycloNum::from_power_sum(level_, std::move(buf_)); }

 private:
  long level_;
  std::vector<Rational> buf_;
};

inline CycloNum CycloNum::lift(long level) const {
  if (level == level_) return *this;
  if (level % level_ != 0) throw Error("lift target level must be a multiple of the current level");
  if (level_ == 1) {
    CycloNum r = zero(level);
    r.coords_[0] = coords_[0];
    return r;
  }
  PowerSum s(level);
  s.add(*this);
  return std::move(s).finish();
}

namespace detail {
inline long common_level(const CycloNum& a, const CycloNum& b) {
  if (a.level() == b.level()) return a.level();
  return checked_level_lcm(a.level(), b.level());
}
}  // namespace detail

inline CycloNum operator+(const CycloNum& a, const CycloNum& b) {
  const long l = detail::common_level(a, b);
  if (a.level() == l && b.level() == l) {
    CycloNum r = a;
    for (std::size_t i = 0; i < r.coords_.size(); ++i) r.coords_[i] += b.coords_[i];
    return r;
  }
  return a.lift(l) + b.lift(l);
}

inline CycloNum operator-(const CycloNum& a, const CycloNum& b) {
  const long l = detail::common_level(a, b);
  if (a.level() == l && b.level() == l) {
    CycloNum r = a;
    for (std::size_t i = 0; i < r.coords_.size(); ++i) r.coords_[i] -= b.coords_[i];
    return r;
  }
  return a.lift(l) - b.lift(l);
}

inline CycloNum operator*(const CycloNum& a, const CycloNum& b) {
  if (a.level() == 1 || b.level() == 1) {
    const CycloNum& scalar = a.level() == 1 ? a : b;
    const CycloNum& other = a.level() == 1 ? b : a;
    CycloNum r = other;
    for (auto& c : r.coords_) c *= scalar.coords_[0];
    return r;
  }
  const long l = detail::common_level(a, b);
  if (a.level() != l || b.level() != l) return a.lift(l) * b.lift(l);
  std::vector<Rational> buf(a.coords_.size() + b.coords_.size() - 1, Rational(0));
  Rational t;
  for (std::size_t i = 0; i < a.coords_.size(); ++i) {
    if (a.coords_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coords_.size(); ++j) {
      if (b.coords_[j] == 0) continue;
      t = a.coords_[i] * b.coords_[j];
      buf[i + j] += t;
    }
  }
  return CycloNum::from_power_sum(l, std::move(buf));
}

inline bool operator==(const CycloNum& a, const CycloNum& b) {
  if (a.level() == b.level()) return a.coords_ == b.coords_;
  if (a.is_rational() && b.is_rational()) return a.coords_[0] == b.coords_[0];
  const long l = detail::common_level(a, b);
  return a.lift(l).coords_ == b.lift(l).coords_;
}

inline CycloNum CycloNum::inverse() const {
  if (is_zero()) throw DivisionByZero();
  if (level_ == 1) return CycloNum(1 / coords_[0]);
  const auto& phi_poly = cyclotomic_polynomial(level_);
  qpoly::Poly modulus(phi_poly.begin(), phi_poly.end());
  auto [s, g] = qpoly::inverse_mod(coords_, modulus);
  if (g.size() != 1) throw Error("internal: element not invertible modulo an irreducible polynomial");
  return from_power_sum(level_, std::move(s));
}

inline CycloNum CycloNum::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  CycloNum result = CycloNum(1);
  CycloNum base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result.level() == level_ ? result : result.lift(level_);
}

enum class ArithOp { Add, Sub, Mul, Div };

/// Field operation at lcm(level(x), level(y)). Division by zero throws DivisionByZero.
inline CycloNum cyc_arith(ArithOp op, const CycloNum& x, const CycloNum& y) {
  switch (op) {
    case ArithOp::Add: return x + y;
    case ArithOp::Sub: return x - y;
    case ArithOp::Mul: return x * y;
    case ArithOp::Div: return x / y;
  }
  throw Error("unknown arithmetic operation");
}

/// The automorphism zeta_N -> zeta_N^e of Q(zeta_N).
class GaloisMap {
 public:
  GaloisMap(long level, long exponent) : level_(level), exponent_(0) {
    if (level < 1) throw InvalidGaloisMap("Galois map level must be positive");
    exponent_ = mod_floor(exponent, level);
    if (std::gcd(exponent_, level) != 1 && level != 1) {
      throw InvalidGaloisMap("exponent " + std::to_string(exponent) + " is not a unit modulo " +
                             std::to_string(level));
    }
    if (level == 1) exponent_ = 1;
  }

  static GaloisMap identity(long level) { return GaloisMap(level, 1); }

  long level() const noexcept { return level_; }
  long exponent() const noexcept { return exponent_; }
  bool is_identity() const noexcept { return exponent_ == 1 || level_ == 1; }

  GaloisMap then(const GaloisMap& o) const {
    if (o.level_ != level_) throw InvalidGaloisMap("composing Galois maps of different levels");
    return GaloisMap(level_, static_cast<long>((static_cast<__int128>(exponent_) * o.exponent_) % level_));
  }

  /// Image of x; level(x) must divide level(). The result stays at level(x).
  CycloNum operator()(const CycloNum& x) const {
    if (level_ % x.level() != 0) {
      throw InvalidGaloisMap("element level " + std::to_string(x.level()) + " does not divide Galois level " +
                             std::to_string(level_));
    }
    if (is_identity() || x.level() <= 2) return x;
    const long n = x.level();
    const long e = exponent_ % n;
    PowerSum s(n);
    const auto& c = x.coords();
    for (std::size_t m = 0; m < c.size(); ++m) {
      if (c[m] != 0) s.add(static_cast<long>((static_cast<__int128>(m) * e) % n), c[m]);
    }
    return std::move(s).finish();
  }

  /// Image of a root of unity whose order divides level().
  RootOfUnity operator()(const RootOfUnity& r) const {
    if (level_ % r.order() != 0) throw InvalidGaloisMap("root order does not divide the Galois level");
    return r.pow(exponent_);
  }

  auto operator<=>(const GaloisMap&) const = default;

 private:
  long level_;
  long exponent_;
};

inline CycloNum galois_apply(const GaloisMap& s, const CycloNum& x) { return s(x); }

/// The root of unity equal to x, if x is one. Roots of unity in Q(zeta_N) are exactly +-zeta_N^k.
inline std::optional<RootOfUnity> as_root_of_unity(const CycloNum& x) {
  const long n = x.level();
  std::vector<long> target(x.coords().size());
  for (std::size_t i = 0; i < target.size(); ++i) {
    const Rational& c = x.coords()[i];
    // Roots of unity are algebraic integers, so their power-basis coordinates are integers.
    if (c.get_den() != 1 || !c.get_num().fits_slong_p()) return std::nullopt;
    target[i] = c.get_num().get_si();
  }
  detail::MonomialWalker walker(n);
  for (long k = 0; k < n; ++k) {
    const auto& cur = walker.current();
    bool plus = true, minus = true;
    for (std::size_t i = 0; i < target.size() && (plus || minus); ++i) {
      if (target[i] != cur[i]) plus = false;
      if (target[i] != -cur[i]) minus = false;
    }
    if (plus) return RootOfUnity::of(n, k);
    if (minus) return RootOfUnity::of(2 * n, n + 2 * k);
    walker.advance();
  }
  return std::nullopt;
}

namespace detail {

/// Units e mod n with e = 1 (mod d): the Galois group of Q(zeta_n) over Q(zeta_d).
inline std::vector<long> relative_galois_group(long n, long d) {
  if (n == 1) return {0};
  std::vector<long> group;
  for (long e = 1; e < n; ++e) {
    if (std::gcd(e, n) == 1 && (e - 1) % d == 0) group.push_back(e);
  }
  return group;
}

/// A small generating set of a subgroup of (Z/n)^*, given all of its elements.
inline std::vector<long> generators_of(const std::vector<long>& group, long n) {
  std::vector<long> gens;
  std::vector<long> span = {1 % n};
  auto contains = [&](long e) { return std::find(span.begin(), span.end(), e) != span.end(); };
  for (long e : group) {
    if (contains(e)) continue;
    gens.push_back(e);
    // close the span under multiplication by the new generator
    std::vector<long> frontier = span;
    while (!frontier.empty()) {
      std::vector<long> next;
      for (long s : frontier) {
        for (long g : gens) {
          const long p = static_cast<long>((static_cast<__int128>(s) * g) % n);
          if (!contains(p)) {
            span.push_back(p);
            next.push_back(p);
          }
        }
      }
      frontier = std::move(next);
    }
  }
  return gens;
}

/// Solves sum y_m * lift(zeta_d^m) = x for the coordinates y of x at level d.
inline std::vector<Rational> coordinates_in_subfield(const CycloNum& x, long d) {
  const long n = x.level();
  const long rows = static_cast<long>(x.coords().size());
  const long cols = euler_phi(d);
  // augmented matrix [A | x], column m = coordinates of zeta_n^(m*n/d)
  std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(cols + 1, Rational(0)));
  for (long m = 0; m < cols; ++m) {
    const CycloNum basis = CycloNum::zeta(n, m * (n / d));
    for (long r = 0; r < rows; ++r) a[r][m] = basis.coords()[r];
  }
  for (long r = 0; r < rows; ++r) a[r][cols] = x.coords()[r];
  long row = 0;
  std::vector<long> pivot_col;
  for (long c = 0; c < cols && row < rows; ++c) {
    long p = row;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[row]);
    const Rational inv = 1 / a[row][c];
    for (long k = c; k <= cols; ++k) a[row][k] *= inv;
    for (long r = 0; r < rows; ++r) {
      if (r == row || a[r][c] == 0) continue;
      const Rational f = a[r][c];
      for (long k = c; k <= cols; ++k) a[r][k] -= f * a[row][k];
    }
    pivot_col.push_back(c);
    ++row;
  }
  for (long r = row; r < rows; ++r) {
    if (a[r][cols] != 0) throw Error("internal: element is not in the requested subfield");
  }
  std::vector<Rational> y(cols, Rational(0));
  for (long r = 0; r < row; ++r) y[pivot_col[r]] = a[r][cols];
  return y;
}

}  // namespace detail

/// True iff x lies in Q(zeta_d); d must divide level(x).
inline bool lies_in_level(const CycloNum& x, long d) {
  const long n = x.level();
  if (n % d != 0) throw Error("subfield level must divide the element level");
  if (d == n) return true;
  const auto group = detail::relative_galois_group(n, d);
  for (long e : detail::generators_of(group, n)) {
    if (!(GaloisMap(n, e)(x) == x)) return false;
  }
  return true;
}

/// Smallest level N' such that x lies in Q(zeta_N').
inline long conductor(const CycloNum& x) {
  const long n = x.level();
  if (x.is_rational()) return 1;
  for (long d : divisors(n)) {
    if (d % 4 == 2) continue;  // Q(zeta_2m) = Q(zeta_m) for odd m
    if (lies_in_level(x, d)) return d;
  }
  return n;
}

/// The same element re-expressed at its conductor.
inline CycloNum conductor_reduce(const CycloNum& x) {
  const long d = conductor(x);
  if (d == x.level()) return x;
  if (d == 1) return CycloNum(x.coords()[0]);
  return CycloNum::from_power_sum(d, detail::coordinates_in_subfield(x, d));
}

/// Re-expresses x at level d, which must satisfy lies_in_level(x, d).
inline CycloNum restrict_to_level(const CycloNum& x, long d) {
  if (d == x.level()) return x;
  if (x.level() % d != 0 || !lies_in_level(x, d)) throw Error("element does not lie in the requested subfield");
  if (d == 1) return CycloNum(x.coords()[0]);
  return CycloNum::from_power_sum(d, detail::coordinates_in_subfield(x, d));
}

}  // namespace cyclotorsion
