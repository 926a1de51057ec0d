#pragma once

// Integer helpers shared by every module: Euler's totient, divisor lists,
// memoized cyclotomic polynomials and the global level limit.

#include <gmpxx.h>

#include <algorithm>
#include <atomic>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <string>
#include <vector>

#include "cyclotorsion/errors.hpp"

namespace cyclotorsion {

using Integer = mpz_class;
using Rational = mpq_class;

inline constexpr long kDefaultLevelLimit = 10080;

namespace detail {
inline std::atomic<long>& level_limit_storage() {
  static std::atomic<long> limit{kDefaultLevelLimit};
  return limit;
}
}  // namespace detail

/// Largest cyclotomic level any operation may create.
inline long level_limit() { return detail::level_limit_storage().load(std::memory_order_relaxed); }

inline void set_level_limit(long limit) {
  if (limit < 1) throw Error("level limit must be positive");
  detail::level_limit_storage().store(limit, std::memory_order_relaxed);
}

/// lcm of two levels, refusing to exceed level_limit().
inline long checked_level_lcm(long a, long b) {
  const long g = std::gcd(a, b);
  const long m = (a / g) * b;
  if (m > level_limit()) {
    throw LevelOverflow("cyclotomic level " + std::to_string(m) + " exceeds the limit " +
                        std::to_string(level_limit()));
  }
  return m;
}

inline long mod_floor(long a, long n) {
  const long r = a % n;
  return r < 0 ? r + n : r;
}

inline std::vector<long> prime_factors(long n) {
  std::vector<long> primes;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      primes.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) primes.push_back(n);
  return primes;
}

inline long euler_phi(long n) {
  long result = n;
  for (long p : prime_factors(n)) result -= result / p;
  return result;
}

/// Divisors of n in increasing order.
inline std::vector<long> divisors(long n) {
  std::vector<long> low, high;
  for (long d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      low.push_back(d);
      if (d != n / d) high.push_back(n / d);
    }
  }
  low.insert(low.end(), high.rbegin(), high.rend());
  return low;
}

inline long radical(long n) {
  long r = 1;
  for (long p : prime_factors(n)) r *= p;
  return r;
}

namespace detail {

using IntPoly = std::vector<long>;

inline IntPoly compute_cyclotomic(long n);

class CyclotomicTable {
 public:
  static CyclotomicTable& instance() {
    static CyclotomicTable table;
    return table;
  }

  const IntPoly& get(long n) {
    {
      std::shared_lock lock(mutex_);
      auto it = table_.find(n);
      if (it != table_.end()) return *it->second;
    }
    // Computed outside the lock: compute_cyclotomic recurses into get().
    auto poly = std::make_shared<const IntPoly>(compute_cyclotomic(n));
    std::unique_lock lock(mutex_);
    auto [it, inserted] = table_.emplace(n, std::move(poly));
    return *it->second;
  }

 private:
  std::shared_mutex mutex_;
  std::map<long, std::shared_ptr<const IntPoly>> table_;
};

inline long to_long_checked(const Integer& v) {
  if (!v.fits_slong_p()) throw Error("cyclotomic polynomial coefficient overflow");
  return v.get_si();
}

inline IntPoly compute_cyclotomic(long n) {
  if (n < 1) throw Error("cyclotomic polynomial of non-positive index");
  if (n == 1) return {-1, 1};
  if (n == 2) return {1, 1};
  const long rad = radical(n);
  if (rad != n) {
    // Phi_n(x) = Phi_rad(x^(n/rad))
    const IntPoly& base = CyclotomicTable::instance().get(rad);
    const long step = n / rad;
    IntPoly out((base.size() - 1) * step + 1, 0);
    for (std::size_t i = 0; i < base.size(); ++i) out[i * step] = base[i];
    return out;
  }
  if (n % 2 == 0) {
    // n = 2m with m odd > 1: Phi_n(x) = Phi_m(-x)
    IntPoly out = CyclotomicTable::instance().get(n / 2);
    for (std::size_t i = 1; i < out.size(); i += 2) out[i] = -out[i];
    return out;
  }
  // Squarefree odd n: divide x^n - 1 by Phi_d for every proper divisor d.
  std::vector<Integer> num(n + 1, 0);
  num[0] = -1;
  num[n] = 1;
  for (long d : divisors(n)) {
    if (d == n) continue;
    const IntPoly& den = CyclotomicTable::instance().get(d);
    const long dd = static_cast<long>(den.size()) - 1;
    const long dn = static_cast<long>(num.size()) - 1;
    std::vector<Integer> q(dn - dd + 1, 0);
    for (long k = dn - dd; k >= 0; --k) {
      const Integer c = num[k + dd];  // den is monic
      q[k] = c;
      if (c == 0) continue;
      for (long i = 0; i <= dd; ++i) {
        if (den[i] != 0) num[k + i] -= c * den[i];
      }
    }
    num = std::move(q);
  }
  IntPoly out(num.size());
  for (std::size_t i = 0; i < num.size(); ++i) out[i] = to_long_checked(num[i]);
  return out;
}

}  // namespace detail

/// Coefficients (low degree first) of the n-th cyclotomic polynomial. Memoized, thread-safe.
inline const std::vector<long>& cyclotomic_polynomial(long n) { return detail::CyclotomicTable::instance().get(n); }

}  // namespace cyclotorsion
