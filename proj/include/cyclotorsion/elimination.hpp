#pragma once

// Bivariate polynomials over Q(zeta_L), resultants and first principal
// subresultant coefficients, and exact counting of common zeros in C^2.
//
// Resultants are computed one rational node at a time: the Sylvester matrix
// is formed with the formal degrees in y, so its determinant specializes
// exactly, and the values are interpolated in x.

#include <optional>
#include <vector>

#include "cyclotorsion/kpoly.hpp"
#include "cyclotorsion/torus_curve.hpp"

namespace cyclotorsion {

/// Dense polynomial sum c[i][j] x^i y^j, all coefficients at level().
class BiPoly {
 public:
  BiPoly() = default;

  BiPoly(long deg_x, long deg_y, long level)
      : level_(level), c_(deg_x + 1, std::vector<CycloNum>(deg_y + 1, CycloNum::zero(level))) {}

  /// x^a y^b f with a, b chosen so that neither x nor y divides the result.
  static BiPoly from_curve(const TorusCurve& f) {
    const LatticePoint lo = f.min_exponent(), span = f.bidegree();
    BiPoly p(span.x, span.y, f.level());
    for (const auto& [e, c] : f.terms()) p.c_[e.x - lo.x][e.y - lo.y] = c;
    return p;
  }

  long level() const noexcept { return level_; }
  long deg_x() const noexcept { return static_cast<long>(c_.size()) - 1; }
  long deg_y() const noexcept { return c_.empty() ? -1 : static_cast<long>(c_[0].size()) - 1; }
  const CycloNum& at(long i, long j) const { return c_[i][j]; }
  CycloNum& at(long i, long j) { return c_[i][j]; }

  long total_degree() const {
    long d = -1;
    for (long i = 0; i <= deg_x(); ++i)
      for (long j = 0; j <= deg_y(); ++j)
        if (!c_[i][j].is_zero()) d = std::max(d, i + j);
    return d;
  }

  BiPoly swapped() const {
    BiPoly s(deg_y(), deg_x(), level_);
    for (long i = 0; i <= deg_x(); ++i)
      for (long j = 0; j <= deg_y(); ++j) s.c_[j][i] = c_[i][j];
    return s;
  }

  /// Coefficients in y of p(x0, y), keeping the formal length deg_y() + 1.
  std::vector<CycloNum> specialize_x(const Rational& x0) const {
    std::vector<CycloNum> out(deg_y() + 1, CycloNum::zero(level_));
    Rational power = 1;
    for (long i = 0; i <= deg_x(); ++i) {
      for (long j = 0; j <= deg_y(); ++j) {
        if (!c_[i][j].is_zero()) out[j] += c_[i][j] * CycloNum(power);
      }
      power *= x0;
    }
    return out;
  }

  /// p(x0, y) for a root of unity x0, as a polynomial in y.
  KPoly specialize_x(const RootOfUnity& x0) const {
    const long l = checked_level_lcm(level_, x0.order());
    const long e = x0.exponent_at(l);
    std::vector<CycloNum> out;
    for (long j = 0; j <= deg_y(); ++j) {
      PowerSum s(l);
      for (long i = 0; i <= deg_x(); ++i) {
        if (!c_[i][j].is_zero()) s.add(c_[i][j], static_cast<long>((static_cast<__int128>(e) * i) % l));
      }
      out.push_back(std::move(s).finish());
    }
    return KPoly(std::move(out));
  }

  /// p(t - lambda y, y) as a polynomial in (t, y).
  BiPoly sheared(long lambda) const {
    const long d = std::max(total_degree(), 0L);
    BiPoly s(d, d, level_);
    for (long i = 0; i <= deg_x(); ++i) {
      for (long j = 0; j <= deg_y(); ++j) {
        if (c_[i][j].is_zero()) continue;
        // (t - lambda y)^i = sum_a C(i, a) t^a (-lambda y)^(i - a)
        Integer binom = 1;
        for (long a = 0; a <= i; ++a) {
          Integer w = binom;
          for (long k = 0; k < i - a; ++k) w *= -lambda;
          s.c_[a][j + i - a] += c_[i][j] * CycloNum(Rational(w));
          binom = binom * (i - a) / (a + 1);
        }
      }
    }
    s.trim();
    return s;
  }

 private:
  void trim() {
    long dx = -1, dy = -1;
    for (long i = 0; i <= deg_x(); ++i)
      for (long j = 0; j <= deg_y(); ++j)
        if (!c_[i][j].is_zero()) dx = std::max(dx, i), dy = std::max(dy, j);
    c_.resize(std::max(dx, 0L) + 1);
    for (auto& row : c_) row.resize(std::max(dy, 0L) + 1, CycloNum::zero(level_));
  }

  long level_ = 1;
  std::vector<std::vector<CycloNum>> c_;
};

namespace detail {

/// Determinant over K by Gaussian elimination.
inline CycloNum determinant(std::vector<std::vector<CycloNum>> m) {
  const std::size_t n = m.size();
  CycloNum det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col].is_zero()) ++piv;
    if (piv == n) return CycloNum(0);
    if (piv != col) {
      std::swap(m[piv], m[col]);
      det = -det;
    }
    det = det * m[col][col];
    const CycloNum inv = m[col][col].inverse();
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m[r][col].is_zero()) continue;
      const CycloNum factor = m[r][col] * inv;
      for (std::size_t c = col; c < n; ++c) {
        if (!m[col][c].is_zero()) m[r][c] -= factor * m[col][c];
      }
    }
  }
  return det;
}

/// Rows y^(k-1) a, ..., a, y^(l-1) b, ..., b with coefficient arrays of
/// formal degrees n = |a| - 1 and m = |b| - 1, restricted to the columns of
/// y^(n+m-j-1) ... y^(j+1) and y^j. j = 0 gives the Sylvester matrix.
inline std::vector<std::vector<CycloNum>> subresultant_matrix(const std::vector<CycloNum>& a,
                                                              const std::vector<CycloNum>& b, long j) {
  const long n = static_cast<long>(a.size()) - 1, m = static_cast<long>(b.size()) - 1;
  const long size = n + m - 2 * j;
  const long top = n + m - j - 1;  // highest power of y appearing in the rows
  std::vector<std::vector<CycloNum>> rows;
  auto add_rows = [&](const std::vector<CycloNum>& p, long deg, long count) {
    for (long s = count - 1; s >= 0; --s) {
      std::vector<CycloNum> row(size, CycloNum(0));
      // row represents y^s p; column c stands for y^(top - c)
      for (long k = 0; k <= deg; ++k) {
        const long c = top - (k + s);
        if (c >= 0 && c < size) row[c] = p[k];
      }
      rows.push_back(std::move(row));
    }
  };
  add_rows(a, n, m - j);
  add_rows(b, m, n - j);
  return rows;
}

inline CycloNum sylvester_resultant(const std::vector<CycloNum>& a, const std::vector<CycloNum>& b) {
  return determinant(subresultant_matrix(a, b, 0));
}

/// Coefficients of the polynomial of degree <= values.size() - 1 taking value
/// values[k] at x = k (Newton divided differences).
inline KPoly interpolate_at_naturals(std::vector<CycloNum> values) {
  const long n = static_cast<long>(values.size());
  for (long level = 1; level < n; ++level) {
    for (long k = n - 1; k >= level; --k) {
      values[k] = (values[k] - values[k - 1]) * CycloNum(Rational(1, level));
    }
  }
  // Horner expansion of sum values[k] * prod_{i<k} (x - i)
  KPoly acc;
  for (long k = n - 1; k >= 0; --k) {
    acc = acc * KPoly(std::vector<CycloNum>{CycloNum(-k), CycloNum(1)}) + KPoly::constant(values[k]);
  }
  return acc;
}

/// Applies `fn` to the y-coefficient arrays of f and g at x = 0, 1, ..., degree
/// and interpolates the resulting values.
template <class Fn>
KPoly eliminate_y(const BiPoly& f, const BiPoly& g, long degree, Fn fn) {
  std::vector<CycloNum> values;
  values.reserve(degree + 1);
  for (long k = 0; k <= degree; ++k) values.push_back(fn(f.specialize_x(Rational(k)), g.specialize_x(Rational(k))));
  return interpolate_at_naturals(std::move(values));
}

}  // namespace detail

/// Res_y(f, g) as a polynomial in x, using the formal y-degrees.
inline KPoly resultant_y(const BiPoly& f, const BiPoly& g) {
  const long n = f.deg_y(), m = g.deg_y();
  const long bound = n * g.deg_x() + m * f.deg_x();
  return detail::eliminate_y(f, g, bound, [](const auto& a, const auto& b) { return detail::sylvester_resultant(a, b); });
}

inline KPoly resultant_x(const BiPoly& f, const BiPoly& g) { return resultant_y(f.swapped(), g.swapped()); }

/// First principal subresultant coefficient in y, as a polynomial in x.
/// Needs both formal y-degrees >= 1.
inline KPoly principal_subresultant_1(const BiPoly& f, const BiPoly& g) {
  const long n = f.deg_y(), m = g.deg_y();
  // each row contributes at most one x-degree; m - 1 rows of f and n - 1 of g
  const long bound = (m - 1) * f.deg_x() + (n - 1) * g.deg_x();
  return detail::eliminate_y(f, g, std::max(bound, 0L),
                             [](const auto& a, const auto& b) { return detail::determinant(detail::subresultant_matrix(a, b, 1)); });
}

struct AffineCount {
  long points = 0;  // distinct common zeros in C^2
  long lambda = 0;  // shear that separated them
};

inline constexpr long kMaxShear = 64;

/// Number of distinct common zeros of f and g in C^2.
///
/// After the shear t = x + lambda y, both polynomials have constant nonzero
/// leading coefficient in y, so Res_y vanishes exactly at the t-values of
/// common zeros. When psc_1 shares no root with Res_y, every such t carries a
/// single y, and the count is the number of distinct roots of Res_y.
inline AffineCount count_affine_intersections(const BiPoly& f, const BiPoly& g) {
  const long df = f.total_degree(), dg = g.total_degree();
  if (df < 0 || dg < 0) throw CommonComponent("zero polynomial in intersection");
  if (df == 0 || dg == 0) return {0, 0};
  for (long lambda = 1; lambda <= kMaxShear; ++lambda) {
    const BiPoly fs = f.sheared(lambda), gs = g.sheared(lambda);
    if (fs.deg_y() != df || gs.deg_y() != dg) continue;  // leading y-coefficient vanished
    const KPoly r = resultant_y(fs, gs);
    if (r.is_zero()) throw CommonComponent("curves share a component");
    const KPoly rsf = squarefree_part(r);
    if (std::min(df, dg) >= 2) {
      const KPoly s1 = principal_subresultant_1(fs, gs);
      if (s1.is_zero() || gcd(rsf, s1).degree() > 0) continue;
    }
    return {rsf.degree(), lambda};
  }
  throw NotCertified("no shear up to " + std::to_string(kMaxShear) + " separates the intersection points");
}

}  // namespace cyclotorsion
