#include <complex>
#include <random>
#include <thread>

#include "cyclotorsion/cyclotomic.hpp"
#include "gtest/gtest.h"

namespace cyclotorsion {
namespace {

CycloNum z(long level, long k) { return CycloNum::zeta(level, k); }

CycloNum random_element(std::mt19937& rng, long level, int span = 3) {
  std::uniform_int_distribution<int> coeff(-span, span);
  std::uniform_int_distribution<int> den(1, 3);
  std::vector<Rational> c(euler_phi(level));
  for (auto& v : c) v = Rational(coeff(rng), den(rng));
  for (auto& v : c) v.canonicalize();
  return CycloNum::from_power_sum(level, c);
}

TEST(CyclotomicPolynomial, SmallCases) {
  EXPECT_EQ(cyclotomic_polynomial(1), (std::vector<long>{-1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(6), (std::vector<long>{1, -1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(12), (std::vector<long>{1, 0, -1, 0, 1}));
  EXPECT_EQ(cyclotomic_polynomial(30), (std::vector<long>{1, 1, 0, -1, -1, -1, 0, 1, 1}));
  // Phi_105 is the first with a coefficient of absolute value 2.
  const auto& p105 = cyclotomic_polynomial(105);
  EXPECT_EQ(p105.size(), 49u);
  EXPECT_EQ(p105[7], -2);
  EXPECT_EQ(p105[41], -2);
}

TEST(CyclotomicPolynomial, ProductOverDivisorsIsXnMinusOne) {
  for (long n = 1; n <= 120; ++n) {
    qpoly::Poly prod{Rational(1)};
    for (long d : divisors(n)) {
      const auto& p = cyclotomic_polynomial(d);
      prod = qpoly::mul(prod, qpoly::Poly(p.begin(), p.end()));
    }
    qpoly::Poly expect(n + 1, Rational(0));
    expect[0] = -1;
    expect[n] = 1;
    EXPECT_EQ(prod, expect) << "n = " << n;
    EXPECT_EQ(static_cast<long>(cyclotomic_polynomial(n).size()) - 1, euler_phi(n));
  }
}

TEST(CyclotomicPolynomial, ConcurrentMemoIsConsistent) {
  std::vector<std::thread> workers;
  std::vector<std::vector<long>> seen(8);
  for (int t = 0; t < 8; ++t) {
    // overlapping divisor sets exercise concurrent inserts into the memo
    workers.emplace_back([t, &seen] { seen[t] = cyclotomic_polynomial(t % 2 == 0 ? 2310 : 4620); });
  }
  for (auto& w : workers) w.join();
  for (int t = 2; t < 8; ++t) EXPECT_EQ(seen[t], seen[t % 2]);
  EXPECT_EQ(static_cast<long>(seen[0].size()) - 1, euler_phi(2310));
  EXPECT_EQ(static_cast<long>(seen[1].size()) - 1, euler_phi(4620));
}

TEST(CycArith, Examples) {
  EXPECT_EQ(cyc_arith(ArithOp::Mul, z(4, 1), z(4, 1)), CycloNum(-1));
  EXPECT_EQ(cyc_arith(ArithOp::Div, CycloNum(1), CycloNum(1) + z(3, 1)), -z(3, 1));
  EXPECT_THROW(cyc_arith(ArithOp::Div, z(5, 1), CycloNum::zero(5)), DivisionByZero);
}

TEST(CycArith, ReduceZeta8AtLevel30) {
  // x^8 mod Phi_30 = -x^7 + x^5 + x^4 + x^3 - x - 1
  const CycloNum reduced = z(30, 8);
  const std::vector<Rational> expect{-1, -1, 0, 1, 1, 1, 0, -1};
  EXPECT_EQ(reduced.coords(), expect);
  EXPECT_NEAR(std::abs(reduced.to_complex() - std::polar(1.0, 2 * std::numbers::pi * 8 / 30)), 0.0, 1e-12);
}

TEST(CycArith, MixedLevelsWorkAtLcm) {
  const CycloNum s = z(4, 1) + z(6, 1);
  EXPECT_EQ(s.level(), 12);
  EXPECT_NEAR(std::abs(s.to_complex() - (std::complex<double>(0, 1) + std::polar(1.0, std::numbers::pi / 3))), 0,
              1e-12);
  EXPECT_EQ(z(5, 1), z(10, 2));
  EXPECT_EQ(z(2, 1), CycloNum(-1));
}

TEST(CycArith, LevelLimitIsEnforced) {
  const long saved = level_limit();
  set_level_limit(100);
  EXPECT_THROW((void)(z(64, 1) * z(9, 1)), LevelOverflow);
  set_level_limit(saved);
  EXPECT_NO_THROW((void)(z(64, 1) * z(9, 1)));
}

TEST(CycArith, FieldAxiomsOnRandomInputs) {
  std::mt19937 rng(20261019);
  std::uniform_int_distribution<long> level_dist(1, 60);
  for (int iter = 0; iter < 150; ++iter) {
    const long la = level_dist(rng), lb = level_dist(rng), lc = level_dist(rng);
    if (std::lcm(std::lcm(la, lb), lc) > 420) continue;
    const CycloNum x = random_element(rng, la), y = random_element(rng, lb), w = random_element(rng, lc);
    EXPECT_EQ((x + y) + w, x + (y + w));
    EXPECT_EQ((x * y) * w, x * (y * w));
    EXPECT_EQ(x * (y + w), x * y + x * w);
    EXPECT_EQ(x * y, y * x);
    if (!x.is_zero()) EXPECT_TRUE((x * x.inverse()).is_one());
    if (!y.is_zero()) EXPECT_EQ((x / y) * y, x);
  }
}

TEST(GaloisApply, Examples) {
  EXPECT_EQ(galois_apply(GaloisMap(30, 7), z(30, 9)), z(30, 3));
  EXPECT_EQ(galois_apply(GaloisMap(5, 2), CycloNum(1) + z(5, 1)), CycloNum(1) + z(5, 2));
  EXPECT_THROW(GaloisMap(30, 2), InvalidGaloisMap);
}

TEST(GaloisApply, HomomorphismAndInjectivity) {
  std::mt19937 rng(7);
  for (long n : {5L, 7L, 12L, 15L, 20L, 30L, 60L}) {
    for (long e = 1; e < n; ++e) {
      if (std::gcd(e, n) != 1) continue;
      const GaloisMap s(n, e);
      const CycloNum x = random_element(rng, n), y = random_element(rng, n);
      EXPECT_EQ(s(x * y), s(x) * s(y));
      EXPECT_EQ(s(x + y), s(x) + s(y));
      if (!(x == y)) EXPECT_FALSE(s(x) == s(y));
      // composing with the inverse map returns the input
      long inv = 1;
      while ((inv * e) % n != 1) ++inv;
      EXPECT_EQ(GaloisMap(n, inv)(s(x)), x);
      EXPECT_EQ(s.then(GaloisMap(n, inv)), GaloisMap::identity(n));
    }
  }
}

TEST(AsRootOfUnity, Examples) {
  const auto a = as_root_of_unity(CycloNum(1) + z(3, 1));
  ASSERT_TRUE(a);
  EXPECT_EQ(*a, RootOfUnity::of(6, 1));
  const auto b = as_root_of_unity(-z(5, 1));
  ASSERT_TRUE(b);
  EXPECT_EQ(*b, RootOfUnity::of(10, 7));
  EXPECT_FALSE(as_root_of_unity(CycloNum(1) + z(4, 1)));
  EXPECT_FALSE(as_root_of_unity(CycloNum(0)));
  EXPECT_FALSE(as_root_of_unity(CycloNum(Rational(1, 2)) * z(7, 1)));
  EXPECT_EQ(*as_root_of_unity(CycloNum(-1)), RootOfUnity::of(2, 1));
}

TEST(AsRootOfUnity, RecoversEveryPowerUpTo60) {
  for (long n = 1; n <= 60; ++n) {
    for (long k = 0; k < n; ++k) {
      const auto r = as_root_of_unity(z(n, k));
      ASSERT_TRUE(r) << n << " " << k;
      EXPECT_EQ(r->order(), n / std::gcd(n, k));
      EXPECT_EQ(*r, RootOfUnity::of(n, k));
    }
  }
}

TEST(ConductorReduce, Examples) {
  const CycloNum a = -z(30, 7) - z(30, 6) + z(30, 2);
  const CycloNum r = conductor_reduce(a);
  EXPECT_EQ(r.level(), 5);
  EXPECT_EQ(r, -z(5, 1) - z(5, 2));
  EXPECT_EQ(r.coords(), (std::vector<Rational>{0, -1, -1, 0}));
  const auto shadow = a.to_complex();
  EXPECT_NEAR(shadow.real(), 0.5, 1e-4);
  EXPECT_NEAR(shadow.imag(), -1.5388, 1e-4);
  EXPECT_NEAR(std::abs(r.to_complex() - shadow), 0, 1e-12);

  const CycloNum six = conductor_reduce(z(6, 1));
  EXPECT_EQ(six.level(), 3);
  EXPECT_EQ(six, -z(3, 2));
  EXPECT_EQ(six.coords(), (std::vector<Rational>{1, 1}));  // -zeta_3^2 = 1 + zeta_3

  const CycloNum q = conductor_reduce(CycloNum(Rational(7, 2)).lift(12));
  EXPECT_EQ(q.level(), 1);
  EXPECT_EQ(q, CycloNum(Rational(7, 2)));
}

TEST(ConductorReduce, IdempotentAndLiftsBack) {
  std::mt19937 rng(99);
  const std::vector<long> sub_levels{1, 3, 4, 5, 7, 8, 12, 15};
  for (int iter = 0; iter < 60; ++iter) {
    const long d = sub_levels[iter % sub_levels.size()];
    const long mult = 1 + iter % 4;
    const long n = d * mult * (iter % 3 == 0 ? 2 : 1);
    const CycloNum x = random_element(rng, d);
    const CycloNum lifted = x.lift(n);
    const CycloNum r = conductor_reduce(lifted);
    EXPECT_EQ(r, x);
    EXPECT_LE(r.level(), d);
    EXPECT_EQ(conductor_reduce(r).level(), r.level());
    EXPECT_EQ(r.lift(n).coords(), lifted.coords());
  }
}

TEST(RootOfUnityType, CanonicalForm) {
  EXPECT_EQ(RootOfUnity::of(12, 8), RootOfUnity::of(3, 2));
  EXPECT_EQ(RootOfUnity::of(7, 0), RootOfUnity());
  EXPECT_EQ(RootOfUnity::of(30, -1), RootOfUnity::of(30, 29));
  EXPECT_EQ(RootOfUnity::of(4, 1) * RootOfUnity::of(4, 1), RootOfUnity::of(2, 1));
  EXPECT_EQ(RootOfUnity::of(6, 1).pow(3), RootOfUnity::of(2, 1));
  EXPECT_EQ(RootOfUnity::of(6, 1).inverse(), RootOfUnity::of(6, 5));
}

TEST(Printing, RendersGrammarSyntax) {
  EXPECT_EQ((-z(30, 7) - z(30, 6) + z(30, 2)).to_string(), "z^2 - z^6 - z^7");
  EXPECT_EQ(CycloNum(Rational(-3, 2)).to_string(), "-3/2");
  EXPECT_EQ((CycloNum(Rational(1, 2)) * z(5, 1)).to_string(), "1/2*z");
  EXPECT_EQ(CycloNum::zero(7).to_string(), "0");
}

}  // namespace
}  // namespace cyclotorsion
