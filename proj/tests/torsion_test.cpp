#include <random>

#include "cyclotorsion/fixtures.hpp"
#include "cyclotorsion/torsion.hpp"
#include "gtest/gtest.h"

namespace cyclotorsion {
namespace {

using fixtures::ExponentPair;

CycloNum z(long level, long k) { return CycloNum::zeta(level, k); }

std::vector<TorsionPoint> as_points(const std::vector<ExponentPair>& pairs, long order) {
  std::vector<TorsionPoint> out;
  for (const auto& [j, k] : pairs) out.push_back(TorsionPoint::joint(order, j, k));
  sort_unique(out);
  return out;
}

TorusCurve curve(std::initializer_list<std::pair<LatticePoint, CycloNum>> terms) {
  return TorusCurve(TorusCurve::Terms(terms.begin(), terms.end()));
}

TEST(TorsionPoint, JointFormAndOrdering) {
  const auto p = TorsionPoint::joint(30, 3, 9);
  EXPECT_EQ(p.order(), 10);
  EXPECT_EQ(p.x_exp(), 1);
  EXPECT_EQ(p.y_exp(), 3);
  EXPECT_LT(TorsionPoint::joint(1, 0, 0), TorsionPoint::joint(2, 0, 1));
  EXPECT_LT(TorsionPoint::joint(6, 1, 5), TorsionPoint::joint(6, 5, 1));
}

TEST(Intersect, ReferenceMembers) {
  const auto m = minimal_translate(graph_curve(fixtures::gamma1()));
  const auto fam = conjugate_family(m.curve, m.conductor);
  const auto f3 = intersect(m.curve, fam.members[2].curve);
  EXPECT_EQ(f3.torsion, as_points({{3, 9}, {18, 24}}, 30));
  const auto f5 = intersect(m.curve, fam.members[4].curve);
  EXPECT_EQ(f5.torsion, as_points({{2, 5}, {4, 13}, {14, 23}, {22, 25}}, 30));
  const auto f1 = intersect(m.curve, fam.members[0].curve);
  EXPECT_TRUE(f1.torsion.empty());
  EXPECT_EQ(f1.nontorsion, 0);
}

TEST(Intersect, CommonComponentIsReported) {
  const TorusCurve f = curve({{{0, 0}, 1}, {{1, 0}, 1}, {{0, 1}, 1}});
  EXPECT_THROW(intersect(f, f), CommonComponent);
}

TEST(Enumerate, Examples) {
  const auto line = enumerate_torsion(curve({{{0, 0}, -1}, {{1, 0}, 1}, {{0, 1}, 1}}));  // x + y - 1
  EXPECT_FALSE(line.infinite());
  EXPECT_EQ(line.points, (std::vector<TorsionPoint>{TorsionPoint::joint(6, 1, 5), TorsionPoint::joint(6, 5, 1)}));

  const auto diag = enumerate_torsion(curve({{{1, 0}, 1}, {{0, 1}, -1}}));  // x - y
  ASSERT_TRUE(diag.infinite());
  EXPECT_EQ(diag.witness->m, 1);
  EXPECT_EQ(diag.witness->n, 1);
  EXPECT_FALSE(diag.witness->product);
  EXPECT_TRUE(diag.witness->zeta.is_one());
  EXPECT_EQ(diag.witness->to_string(), "x - zeta_1^0*y");

  const auto two = enumerate_torsion(curve({{{1, 1}, 1}, {{0, 0}, -2}}));  // xy - 2
  EXPECT_FALSE(two.infinite());
  EXPECT_TRUE(two.points.empty());
}

TEST(Enumerate, ReferenceMaps) {
  const auto e1 = enumerate_torsion(graph_curve(fixtures::gamma1()));
  EXPECT_EQ(e1.case_tag, CaseTag::iv);
  EXPECT_EQ(e1.conductor, 5);
  EXPECT_EQ(e1.points, as_points(fixtures::gamma1_points(), 30));
  const auto e2 = enumerate_torsion(graph_curve(fixtures::gamma2()), {.threads = 4});
  EXPECT_EQ(e2.conductor, 15);
  EXPECT_EQ(e2.points, as_points(fixtures::gamma2_points(), 60));
}

TEST(Enumerate, ThreadCountDoesNotChangeOutput) {
  const TorusCurve f = graph_curve(fixtures::gamma1());
  EXPECT_EQ(enumerate_torsion(f, {.threads = 1}).points, enumerate_torsion(f, {.threads = 7}).points);
}

TEST(Enumerate, CommutesWithTranslation) {
  const TorusCurve f = graph_curve(fixtures::gamma1());
  const RootOfUnity s1 = RootOfUnity::of(4, 1), s2 = RootOfUnity::of(3, 2);
  const auto moved = enumerate_torsion(translate_curve(f, s1, s2));
  std::vector<TorsionPoint> expect;
  for (const auto& p : enumerate_torsion(f).points) expect.push_back({p.x * s1, p.y * s2});
  sort_unique(expect);
  EXPECT_EQ(moved.points, expect);
}

TEST(Bound, ReferenceCases) {
  const auto b1 = bound_torsion(graph_curve(fixtures::gamma1()));
  EXPECT_EQ(b1.case_tag, CaseTag::iv);
  EXPECT_EQ(b1.minimal_n, 5);
  EXPECT_EQ(b1.total, 18);
  ASSERT_EQ(b1.members.size(), 7u);
  EXPECT_EQ(b1.members[2].bound, 2);
  EXPECT_EQ(b1.members[3].bound, 4);
  const auto b2 = bound_torsion(graph_curve(fixtures::gamma2()));
  EXPECT_EQ(b2.minimal_n, 15);
  EXPECT_EQ(b2.total, 18);
  const auto gauss = bound_torsion(graph_curve(MobiusMap(1, z(4, 1), 2, 3)));
  EXPECT_EQ(gauss.case_tag, CaseTag::v);
  EXPECT_EQ(gauss.total, 10);
  const auto two = bound_torsion(curve({{{1, 1}, 1}, {{0, 0}, -2}}));
  EXPECT_EQ(two.case_tag, CaseTag::ii);
  EXPECT_EQ(two.total, 0);
  EXPECT_FALSE(two.infinite);
}

TEST(Distribute, ReferenceTables) {
  const auto t1 = distribute(graph_curve(fixtures::gamma1()));
  const auto want1 = fixtures::gamma1_distribution();
  ASSERT_EQ(t1.rows.size(), 7u);
  for (std::size_t i = 0; i < 7; ++i) EXPECT_EQ(t1.rows[i].points, as_points(want1[i], 30)) << t1.rows[i].label;
  const auto t2 = distribute(graph_curve(fixtures::gamma2()), {.threads = 3});
  const auto want2 = fixtures::gamma2_distribution();
  for (std::size_t i = 0; i < 7; ++i) EXPECT_EQ(t2.rows[i].points, as_points(want2[i], 60)) << t2.rows[i].label;
  EXPECT_EQ(t2.rows[4].nontorsion, 2);
  EXPECT_EQ(t2.rows[5].nontorsion, 2);
}

TEST(BruteForce, Examples) {
  EXPECT_EQ(brute_force_torsion(graph_curve(fixtures::gamma1()), 60), as_points(fixtures::gamma1_points(), 30));
  EXPECT_EQ(brute_force_torsion(curve({{{0, 0}, -1}, {{1, 0}, 1}, {{0, 1}, 1}}), 12).size(), 2u);
  // xy = zeta_3 with joint order <= 12: x ranges over mu_12 and mu_9
  EXPECT_EQ(brute_force_torsion(curve({{{1, 1}, 1}, {{0, 0}, -z(3, 1)}}), 12).size(), 18u);
}

TEST(ConjugacyWitness, PrimitiveImages) {
  EXPECT_EQ(conjugacy_witness(5).sign, 1);
  EXPECT_TRUE(conjugacy_witness(5).square);
  EXPECT_EQ(conjugacy_witness(6).sign, -1);
  EXPECT_FALSE(conjugacy_witness(4).square);
  for (long n = 1; n <= 200; ++n) EXPECT_EQ(conjugacy_witness(n).apply(RootOfUnity::of(n, 1)).order(), n) << n;
}

}  // namespace
}  // namespace cyclotorsion
