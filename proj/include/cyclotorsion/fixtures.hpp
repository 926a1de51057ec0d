#pragma once

// Two reference Möbius maps whose graphs carry 14 torsion points each, with
// their known torsion points written as exponents of zeta_30 and zeta_60.

#include <array>
#include <utility>
#include <vector>

#include "cyclotorsion/curves.hpp"

namespace cyclotorsion::fixtures {

inline CycloNum zeta_sum(long level, std::initializer_list<std::pair<long, long>> terms) {
  CycloNum s = CycloNum::zero(level);
  for (const auto& [coef, k] : terms) s += CycloNum(coef) * CycloNum::zeta(level, k);
  return s;
}

/// Level 30; its minimal translate lives over Q(zeta_5).
inline MobiusMap gamma1() {
  const long n = 30;
  return MobiusMap(zeta_sum(n, {{-1, 7}, {-1, 6}, {1, 2}}), zeta_sum(n, {{1, 7}, {-1, 2}}), CycloNum(1),
                   zeta_sum(n, {{-1, 6}, {-1, 0}}));
}

/// gamma1's entries rewritten over Q(xi), xi = zeta_5^3 (= -zeta_30^3), as
/// conductor reduction produces them.
inline std::array<CycloNum, 4> gamma1_reduced_entries() {
  const CycloNum xi = CycloNum::zeta(5, 3);
  const CycloNum xi2 = xi * xi, xi3 = xi2 * xi;
  return {xi3 + xi + 1, -xi3 - xi2 - xi - 1, CycloNum(1), -xi2 - 1};
}

/// The xi-form as it is usually quoted. Its graph misses (1, 1): f(1, 1) = -xi^2.
inline std::array<CycloNum, 4> gamma1_quoted_entries() {
  const CycloNum xi = CycloNum::zeta(5, 3);
  const CycloNum xi2 = xi * xi, xi3 = xi2 * xi;
  return {-xi3 - xi2 + xi + 1, xi3 - xi2 - xi - 1, CycloNum(1), -xi2 - 1};
}

/// Level 60 with only even exponents, so the coefficients lie in Q(zeta_30) = Q(zeta_15).
inline MobiusMap gamma2() {
  const long n = 60;
  return MobiusMap(zeta_sum(n, {{-1, 14}, {-1, 12}, {-1, 10}, {1, 4}, {1, 2}, {1, 0}}),
                   zeta_sum(n, {{1, 14}, {1, 12}, {1, 10}, {-1, 6}, {-1, 4}, {-1, 2}}),
                   zeta_sum(n, {{1, 12}, {1, 10}, {1, 8}, {-1, 2}}),
                   zeta_sum(n, {{-1, 12}, {-1, 10}, {-1, 8}, {-1, 6}, {1, 2}, {1, 0}}));
}

using ExponentPair = std::pair<long, long>;

inline constexpr long kGamma1Order = 30;
inline constexpr long kGamma2Order = 60;

inline std::vector<ExponentPair> gamma1_points() {
  return {{0, 0},   {1, 2},   {2, 5},   {3, 9},   {4, 13},  {5, 16},  {6, 18},
          {9, 21},  {11, 22}, {14, 23}, {18, 24}, {22, 25}, {25, 26}, {27, 27}};
}

inline std::vector<ExponentPair> gamma2_points() {
  return {{0, 0},   {1, 9},   {2, 18},  {4, 28},  {6, 32},  {8, 34},  {12, 36},
          {22, 38}, {31, 39}, {40, 40}, {50, 42}, {54, 44}, {56, 46}, {58, 50}};
}

/// Points of gamma1 on each family member f1..f7 of its level-5 minimal translate.
inline std::vector<std::vector<ExponentPair>> gamma1_distribution() {
  return {{},
          {},
          {{3, 9}, {18, 24}},
          {{0, 0}, {3, 9}, {6, 18}, {18, 24}},
          {{2, 5}, {4, 13}, {14, 23}, {22, 25}},
          {{1, 2}, {5, 16}, {11, 22}, {25, 26}},
          {{3, 9}, {9, 21}, {18, 24}, {27, 27}}};
}

/// Same for gamma2 over Q(zeta_15).
inline std::vector<std::vector<ExponentPair>> gamma2_distribution() {
  return {{},
          {},
          {{1, 9}, {31, 39}},
          {{0, 0}, {4, 28}, {12, 36}, {40, 40}},
          {{8, 34}, {56, 46}},
          {{6, 32}, {54, 44}},
          {{2, 18}, {22, 38}, {50, 42}, {58, 50}}};
}

}  // namespace cyclotorsion::fixtures
