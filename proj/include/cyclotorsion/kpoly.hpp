#pragma once

// Univariate polynomials over a cyclotomic field, and location of their roots
// that are roots of unity.

#include <algorithm>
#include <complex>
#include <numbers>
#include <set>
#include <utility>
#include <vector>

#include "cyclotorsion/cyclotomic.hpp"

namespace cyclotorsion {

/// Dense polynomial with CycloNum coefficients (low degree first). All
/// coefficients are kept at one common level.
class KPoly {
 public:
  KPoly() = default;
  explicit KPoly(std::vector<CycloNum> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

  static KPoly constant(const CycloNum& c) { return KPoly(std::vector<CycloNum>{c}); }

  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  long level() const { return level_; }
  const std::vector<CycloNum>& coeffs() const { return coeffs_; }
  const CycloNum& operator[](std::size_t i) const { return coeffs_[i]; }
  CycloNum coeff(long i) const {
    return i >= 0 && i <= degree() ? coeffs_[i] : CycloNum::zero(level_);
  }
  const CycloNum& lead() const { return coeffs_.back(); }

  /// Lowest exponent with a nonzero coefficient; 0 for the zero polynomial.
  long valuation() const {
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      if (!coeffs_[i].is_zero()) return static_cast<long>(i);
    return 0;
  }

  KPoly lift(long level) const {
    std::vector<CycloNum> c;
    c.reserve(coeffs_.size());
    for (const auto& v : coeffs_) c.push_back(v.lift(level));
    KPoly r;
    r.coeffs_ = std::move(c);
    r.level_ = level;
    return r;
  }

  friend KPoly operator+(const KPoly& a, const KPoly& b) {
    std::vector<CycloNum> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < out.size(); ++i) {
      if (i < a.coeffs_.size() && i < b.coeffs_.size()) out[i] = a.coeffs_[i] + b.coeffs_[i];
      else out[i] = i < a.coeffs_.size() ? a.coeffs_[i] : b.coeffs_[i];
    }
    return KPoly(std::move(out));
  }

  KPoly operator-() const {
    std::vector<CycloNum> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(-c);
    return KPoly(std::move(out));
  }

  friend KPoly operator-(const KPoly& a, const KPoly& b) { return a + (-b); }

  friend KPoly operator*(const KPoly& a, const KPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    const long l = checked_level_lcm(a.level_, b.level_);
    std::vector<CycloNum> out(a.coeffs_.size() + b.coeffs_.size() - 1, CycloNum::zero(l));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
        if (b.coeffs_[j].is_zero()) continue;
        out[i + j] += a.coeffs_[i] * b.coeffs_[j];
      }
    }
    return KPoly(std::move(out));
  }

  KPoly scaled(const CycloNum& c) const {
    std::vector<CycloNum> out;
    out.reserve(coeffs_.size());
    for (const auto& v : coeffs_) out.push_back(v * c);
    return KPoly(std::move(out));
  }

  /// Quotient and remainder of a by b (b nonzero).
  friend std::pair<KPoly, KPoly> divmod(const KPoly& a, const KPoly& b) {
    if (b.is_zero()) throw DivisionByZero();
    if (a.degree() < b.degree()) return {KPoly{}, a};
    const long l = checked_level_lcm(a.level_, b.level_);
    std::vector<CycloNum> rem = a.lift(l).coeffs_;
    const KPoly bl = b.lift(l);
    const CycloNum inv_lead = bl.lead().inverse();
    const long db = b.degree();
    std::vector<CycloNum> q(a.degree() - db + 1, CycloNum::zero(l));
    for (long k = a.degree() - db; k >= 0; --k) {
      const CycloNum c = rem[k + db] * inv_lead;
      q[k] = c;
      if (c.is_zero()) continue;
      for (long i = 0; i <= db; ++i) {
        if (!bl.coeffs_[i].is_zero()) rem[k + i] -= c * bl.coeffs_[i];
      }
    }
    rem.resize(db);
    return {KPoly(std::move(q)), KPoly(std::move(rem))};
  }

  KPoly monic() const {
    if (is_zero()) return *this;
    return scaled(lead().inverse());
  }

  KPoly derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<CycloNum> out;
    for (std::size_t i = 1; i < coeffs_.size(); ++i) out.push_back(coeffs_[i] * CycloNum(static_cast<long>(i)));
    return KPoly(std::move(out));
  }

  /// Drops the factor x^valuation().
  KPoly without_zero_root() const {
    const long v = valuation();
    if (v == 0) return *this;
    return KPoly(std::vector<CycloNum>(coeffs_.begin() + v, coeffs_.end()));
  }

  CycloNum evaluate(const CycloNum& x) const {
    CycloNum acc = CycloNum::zero(level_);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  /// p(r) for a root of unity r, at level lcm(level(), order(r)).
  CycloNum evaluate(const RootOfUnity& r) const {
    const long l = checked_level_lcm(level_, r.order());
    PowerSum s(l);
    const long e = r.exponent_at(l);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      s.add(coeffs_[i], static_cast<long>((static_cast<__int128>(e) * static_cast<long>(i)) % l));
    }
    return std::move(s).finish();
  }

  KPoly galois(const GaloisMap& s) const {
    std::vector<CycloNum> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(s(c));
    return KPoly(std::move(out));
  }

  friend bool operator==(const KPoly& a, const KPoly& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void normalize() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    level_ = 1;
    for (const auto& c : coeffs_) level_ = c.level() == level_ ? level_ : checked_level_lcm(level_, c.level());
    for (auto& c : coeffs_) {
      if (c.level() != level_) c = c.lift(level_);
    }
  }

  std::vector<CycloNum> coeffs_;
  long level_ = 1;
};

/// Monic gcd.
inline KPoly gcd(KPoly a, KPoly b) {
  while (!b.is_zero()) {
    KPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

inline KPoly squarefree_part(const KPoly& p) {
  if (p.degree() <= 0) return p.monic();
  return divmod(p, gcd(p, p.derivative())).first.monic();
}

/// Number of distinct complex roots.
inline long distinct_root_count(const KPoly& p) {
  if (p.is_zero()) throw Error("distinct_root_count of the zero polynomial");
  return squarefree_part(p).degree();
}

/// All distinct roots of p that are roots of unity, sorted.
///
/// Over K = Q(zeta_L), a root of order n has degree phi(lcm(n, L)) / phi(L)
/// over K, at most deg p. Writing lcm(n, L) = L r gives phi(r) <= deg p, so n
/// divides L r for one of finitely many r. Candidates are screened in double
/// precision with a loose tolerance and confirmed by exact evaluation.
inline std::vector<RootOfUnity> roots_of_unity(const KPoly& p) {
  if (p.is_zero()) throw Error("roots of the zero polynomial");
  const KPoly q = p.without_zero_root();
  if (q.degree() <= 0) return {};
  const long d = q.degree();
  const long l = q.level();
  const long phi_l = euler_phi(l);

  std::vector<std::complex<double>> shadow;
  double scale = 1.0;
  for (const auto& c : q.coeffs()) {
    shadow.push_back(c.to_complex());
    for (const auto& v : c.coords()) scale += std::abs(v.get_d());
  }
  const double tol = 1e-8 * scale;

  std::set<long> orders;
  for (long r = 1; r <= 2 * d * d; ++r) {
    if (euler_phi(r) > d) continue;
    for (long n : divisors(l * r)) {
      if (euler_phi(std::lcm(n, l)) <= d * phi_l) orders.insert(n);
    }
  }
  std::vector<RootOfUnity> roots;
  for (long n : orders) {
    for (long k = 0; k < n; ++k) {
      if (std::gcd(k, n) != 1) continue;
      const std::complex<double> x = std::polar(1.0, 2 * std::numbers::pi * static_cast<double>(k) / n);
      std::complex<double> acc{0, 0};
      for (auto it = shadow.rbegin(); it != shadow.rend(); ++it) acc = acc * x + *it;
      if (std::abs(acc) > tol) continue;
      const RootOfUnity r = RootOfUnity::of(n, k);
      if (q.evaluate(r).is_zero()) roots.push_back(r);
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace cyclotorsion
