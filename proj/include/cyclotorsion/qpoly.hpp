#pragma once

// Dense univariate polynomials over Q, coefficients stored low degree first.

#include <utility>
#include <vector>

#include "cyclotorsion/arith.hpp"

namespace cyclotorsion::qpoly {

using Poly = std::vector<Rational>;

inline void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

/// Degree, with -1 for the zero polynomial.
inline long degree(const Poly& p) { return static_cast<long>(p.size()) - 1; }

inline Poly add(const Poly& a, const Poly& b) {
  Poly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  trim(out);
  return out;
}

inline Poly sub(const Poly& a, const Poly& b) {
  Poly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  trim(out);
  return out;
}

inline Poly mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  Rational t;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      t = a[i] * b[j];
      out[i + j] += t;
    }
  }
  trim(out);
  return out;
}

inline Poly scale(Poly p, const Rational& c) {
  if (c == 0) return {};
  for (auto& v : p) v *= c;
  return p;
}

/// Quotient and remainder; b must be nonzero.
inline std::pair<Poly, Poly> divmod(Poly a, const Poly& b) {
  if (b.empty()) throw DivisionByZero();
  trim(a);
  if (a.size() < b.size()) return {Poly{}, a};
  const long db = degree(b);
  Poly q(a.size() - b.size() + 1, 0);
  const Rational inv_lead = 1 / b.back();
  Rational t;
  for (long k = degree(a) - db; k >= 0; --k) {
    const Rational c = a[k + db] * inv_lead;
    q[k] = c;
    if (c == 0) continue;
    for (long i = 0; i <= db; ++i) {
      t = c * b[i];
      a[k + i] -= t;
    }
  }
  a.resize(db);
  trim(a);
  trim(q);
  return {q, a};
}

inline Poly monic(Poly p) {
  trim(p);
  if (p.empty()) return p;
  const Rational inv = 1 / p.back();
  for (auto& v : p) v *= inv;
  return p;
}

inline Poly gcd(Poly a, Poly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

/// Returns s with s*a = gcd(a, m) (mod m), together with that gcd (monic).
inline std::pair<Poly, Poly> inverse_mod(const Poly& a, const Poly& m) {
  Poly r0 = m, r1 = a;
  Poly s0{}, s1{Rational(1)};
  trim(r1);
  while (!r1.empty()) {
    auto [q, r] = divmod(r0, r1);
    Poly s2 = sub(s0, mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r0.empty()) return {Poly{}, Poly{}};
  const Rational inv = 1 / r0.back();
  return {scale(s0, inv), scale(r0, inv)};
}

inline Poly derivative(const Poly& p) {
  if (p.size() <= 1) return {};
  Poly out(p.size() - 1);
  for (std::size_t i = 1; i < p.size(); ++i) out[i - 1] = p[i] * static_cast<long>(i);
  trim(out);
  return out;
}

/// Monic squarefree part p / gcd(p, p').
inline Poly squarefree_part(const Poly& p) {
  Poly g = gcd(p, derivative(p));
  return monic(divmod(p, g).first);
}

/// True iff the monic integer polynomial m divides p.
inline bool divisible_by(const Poly& p, const std::vector<long>& m) {
  Poly rem = p;
  trim(rem);
  const long dm = static_cast<long>(m.size()) - 1;
  Rational t;
  for (long k = degree(rem) - dm; k >= 0; --k) {
    const Rational c = rem[k + dm];
    if (c == 0) continue;
    for (long i = 0; i <= dm; ++i) {
      if (m[i] == 0) continue;
      t = c * m[i];
      rem[k + i] -= t;
    }
  }
  for (long i = 0; i < std::min<long>(dm, static_cast<long>(rem.size())); ++i) {
    if (rem[i] != 0) return false;
  }
  return true;
}

}  // namespace cyclotorsion::qpoly
