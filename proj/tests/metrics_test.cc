/*
 * Copyright 2026 The rankcompat Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "rankcompat/metrics.h"

#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"
#include "oracles.h"
#include "rankcompat/status.h"
#include "test_util.h"

namespace rankcompat {
namespace {

using testing::CodeOf;
using V = std::vector<double>;
using L = std::vector<int>;

// One negative scored 0.5 against 30 positives. The original ranks 26 of the
// pairs correctly, the updated model 25 of those plus 2 others.
struct WorkedExample {
  V o, u;
  L y;
  WorkedExample() {
    y.push_back(0);
    o.push_back(0.5);
    u.push_back(0.5);
    for (int j = 0; j < 30; ++j) {
      y.push_back(1);
      const double above = 0.6 + 0.01 * j, below = 0.1 + 0.01 * j;
      o.push_back(j < 26 ? above : below);
      u.push_back((j < 25 || j == 26 || j == 27) ? above : below);
    }
  }
};

TEST_CASE("auroc counts strictly ordered pairs") {
  CHECK(Auroc(V{0.1, 0.4, 0.35, 0.8}, L{0, 0, 1, 1}) == 0.75);
  CHECK(Auroc(V{0.2, 0.9}, L{0, 1}) == 1.0);
  CHECK(Auroc(V{0.9, 0.2}, L{0, 1}) == 0.0);
  // A tie is never a correct ranking.
  CHECK(Auroc(V{0.5, 0.5}, L{0, 1}) == 0.0);
  CHECK(Auroc(V{0.5, 0.5, 0.7}, L{0, 1, 1}) == 0.5);
  CHECK(CountCorrectPairs(V{0.1, 0.4, 0.35, 0.8}, L{0, 0, 1, 1}) == 3);
}

TEST_CASE("auroc errors") {
  CHECK(CodeOf([] { Auroc(V{0.1, 0.2}, L{1, 1}); }) == ErrorCode::kSingleClass);
  CHECK(CodeOf([] { Auroc(V{0.1, 0.2}, L{0, 0}); }) == ErrorCode::kSingleClass);
  CHECK(CodeOf([] { Auroc(V{0.1}, L{0, 1}); }) ==
        ErrorCode::kLengthMismatch);
  CHECK(CodeOf([] { Auroc(V{0.1, NAN}, L{0, 1}); }) ==
        ErrorCode::kNonFiniteScore);
  CHECK(CodeOf([] { Auroc(V{0.1, 0.2}, L{0, 2}); }) ==
        ErrorCode::kSchemaError);
}

TEST_CASE("auroc matches the rank-sum oracle") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 200; ++t) {
    const auto inst = oracle::RandomInstance(2 + rng() % 150, rng);
    CHECK(Auroc(inst.o, inst.y) == oracle::RankSumAuroc(inst.o, inst.y));
  }
}

TEST_CASE("accuracy thresholds with strict >") {
  CHECK(Accuracy(V{0.2, 0.9}, L{0, 1}, 0.5) == 1.0);
  CHECK(Accuracy(V{0.2, 0.9}, L{0, 1}, 0.95) == 0.5);
  CHECK(Accuracy(V{0.5, 0.5}, L{0, 1}, 0.5) == 0.5);  // 0.5 is not > 0.5
  // 9 of 11 patients labelled correctly.
  L y(11, 0);
  V p(11, 0.1);
  p[0] = p[1] = 0.9;  // two false positives
  CHECK(Accuracy(p, y, 0.5) == 9.0 / 11.0);
  CHECK(CodeOf([] { Accuracy(V{0.1}, L{0, 1}, 0.5); }) ==
        ErrorCode::kLengthMismatch);
}

TEST_CASE("btc") {
  // Original correct on patients {0,1,3}; updated on {0,2,3}.
  const L y{1, 0, 1, 0};
  const V o{0.9, 0.1, 0.1, 0.1};
  const V u{0.9, 0.9, 0.9, 0.1};
  CHECK(Btc(o, u, y, 0.5, 0.5) == 2.0 / 3.0);
  CHECK(Btc(o, o, y, 0.5, 0.5) == 1.0);

  // Count form: original right on 9 of 10 patients, both right on 8.
  L y10(10, 1);
  V o10(10, 0.9), u10(10, 0.9);
  o10[9] = 0.1;  // original wrong on the last patient
  u10[0] = 0.1;  // updated newly wrong on the first
  CHECK(Btc(o10, u10, y10, 0.5, 0.5) == 8.0 / 9.0);

  CHECK(CodeOf([] {
          Btc(V{0.9, 0.9}, V{0.1, 0.1}, L{0, 0}, 0.5, 0.5);
        }) == ErrorCode::kOriginalAllWrong);
  CHECK(CodeOf([] { Btc(V{0.9}, V{0.1, 0.1}, L{0, 0}, 0.5, 0.5); }) ==
        ErrorCode::kLengthMismatch);
}

TEST_CASE("btc is asymmetric") {
  const L y{1, 0, 1, 0};
  const V o{0.9, 0.1, 0.1, 0.1};  // predicts [1,0,0,0]
  const V u{0.9, 0.1, 0.9, 0.1};  // predicts [1,0,1,0]
  CHECK(Btc(o, u, y, 0.5, 0.5) == 1.0);
  CHECK(Btc(u, o, y, 0.5, 0.5) == 0.75);
}

TEST_CASE("btc uses separate thresholds") {
  const L y{1, 1, 0, 0};
  const V p{0.3, 0.8, 0.2, 0.6};
  // tau_o = 0: original predicts all 1, correct on the two positives.
  // tau_u = 1: updated predicts all 0, wrong on both of them.
  CHECK(Btc(p, p, y, 0.0, 1.0) == 0.0);
  CHECK(Btc(p, p, y, 0.0, 0.25) == 1.0);
}

TEST_CASE("rbc") {
  const L y{0, 0, 1};
  const V o{0.2, 0.3, 0.5};
  const V u{0.4, 0.6, 0.5};
  CHECK(Rbc(o, u, y) == 0.5);
  CHECK(Rbc(o, o, y) == 1.0);
  CHECK(Rbc(u, o, y) == 1.0);
  CHECK(CodeOf([] { Rbc(V{0.5, 0.4}, V{0.1, 0.9}, L{0, 1}); }) ==
        ErrorCode::kOriginalNoCorrectPairs);
  CHECK(CodeOf([] { Rbc(V{0.1, 0.9}, V{0.1, 0.9}, L{1, 1}); }) ==
        ErrorCode::kSingleClass);
  // Ties: an all-tied original ranks nothing correctly.
  CHECK(CodeOf([] { Rbc(V{0.5, 0.5}, V{0.1, 0.9}, L{0, 1}); }) ==
        ErrorCode::kOriginalNoCorrectPairs);
}

TEST_CASE("rbc is reflexive on tie-free inputs") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 50; ++t) {
    auto inst = oracle::RandomInstance(3 + rng() % 60, rng);
    // Make sure the original gets at least one pair right.
    if (CountCorrectPairs(inst.o, inst.y) == 0) continue;
    CHECK(Rbc(inst.o, inst.o, inst.y) == 1.0);
  }
}

TEST_CASE("rbc_general") {
  CHECK(RbcGeneral(V{0.2, 0.3, 0.5}, V{0.4, 0.6, 0.5}, L{0, 0, 1}) == 0.5);
  CHECK(RbcGeneral(V{0.1, 0.5, 0.9}, V{0.2, 0.9, 0.5}, L{0, 1, 2}) ==
        2.0 / 3.0);
  CHECK(CodeOf([] { RbcGeneral(V{0.1, 0.2}, V{0.1, 0.2}, L{3, 3}); }) ==
        ErrorCode::kNoOrderedPairs);
  CHECK(CodeOf([] { RbcGeneral(V{0.9, 0.2}, V{0.1, 0.2}, L{0, 1}); }) ==
        ErrorCode::kOriginalNoCorrectPairs);
}

TEST_CASE("rbc_general reduces to rbc and matches brute force") {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 100; ++t) {
    const auto inst = oracle::RandomInstance(3 + rng() % 80, rng);
    if (CountCorrectPairs(inst.o, inst.y) == 0) continue;
    CHECK(RbcGeneral(inst.o, inst.u, inst.y) == Rbc(inst.o, inst.u, inst.y));
  }
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 3 + rng() % 50;
    auto o = oracle::DistinctScores(n, rng);
    auto u = oracle::DistinctScores(n, rng);
    L y(n);
    for (auto& v : y) v = static_cast<int>(rng() % 4);
    const auto b = oracle::BruteRbcOrdinal(o, u, y);
    if (!std::isfinite(b)) continue;  // no ordered or no correct pairs
    CHECK(RbcGeneral(o, u, y) == b);
  }
}

TEST_CASE("pop_table example") {
  const auto pop =
      ComputePopTable(V{0.2, 0.3, 0.5}, V{0.4, 0.6, 0.5}, L{0, 0, 1});
  CHECK(pop.m == 2);
  CHECK(pop.m_pp == 1);
  CHECK(pop.m_pm == 1);
  CHECK(pop.m_mp == 0);
  CHECK(pop.m_mm == 0);
  CHECK(pop.auroc_o == 1.0);
  CHECK(pop.auroc_u == 0.5);
  CHECK(pop.phi_pp == 0.5);
  CHECK(RbcFromPop(pop) == 0.5);
}

TEST_CASE("pop_table invariants on random instances") {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 100; ++t) {
    const auto inst = oracle::RandomInstance(2 + rng() % 120, rng);
    const auto pop = ComputePopTable(inst.o, inst.u, inst.y);
    const auto brute = oracle::BrutePairs(inst.o, inst.u, inst.y);
    const auto n1 = static_cast<std::uint64_t>(
        std::count(inst.y.begin(), inst.y.end(), 1));
    const auto n0 = inst.y.size() - n1;
    CHECK(pop.m == n0 * n1);
    CHECK(pop.m_pp + pop.m_pm + pop.m_mp + pop.m_mm == pop.m);
    CHECK(pop.m_pp == brute.pp);
    CHECK(pop.m_pm == brute.pm);
    CHECK(pop.m_mp == brute.mp);
    CHECK(pop.m_mm == brute.mm);
    CHECK(pop.phi_pp + pop.phi_pm + pop.phi_mp + pop.phi_mm ==
          doctest::Approx(1.0).epsilon(1e-12));
    CHECK(pop.auroc_o == Auroc(inst.o, inst.y));
    CHECK(pop.auroc_u == Auroc(inst.u, inst.y));
    CHECK(pop.auroc_u == doctest::Approx(pop.phi_pp + pop.phi_mp));
  }
}

TEST_CASE("worked example counts") {
  const WorkedExample ex;
  const auto pop = ComputePopTable(ex.o, ex.u, ex.y);
  CHECK(pop.m == 30);
  CHECK(pop.m_pp == 25);
  CHECK(pop.original_correct() == 26);
  CHECK(Rbc(ex.o, ex.u, ex.y) == 25.0 / 26.0);
  CHECK(RbcFromPop(pop) == 25.0 / 26.0);
  CHECK(Auroc(ex.o, ex.y) == 26.0 / 30.0);
  CHECK(pop.auroc_o == 26.0 / 30.0);
}

TEST_CASE("rbc_from_pop") {
  CHECK(RbcFromPop(PopTable::FromCounts(25, 1, 2, 2)) == 25.0 / 26.0);
  CHECK(RbcFromPop(PopTable::FromCounts(7, 0, 1, 1)) == 1.0);
  CHECK(RbcFromPop(PopTable::FromCounts(1, 1, 0, 0)) == 0.5);
  CHECK(CodeOf([] { RbcFromPop(PopTable::FromCounts(0, 0, 3, 1)); }) ==
        ErrorCode::kOriginalNoCorrectPairs);
  const auto pop = PopTable::FromCounts(25, 1, 2, 2);
  CHECK(pop.m == 30);
  CHECK(pop.auroc_o == 26.0 / 30.0);
  CHECK(pop.auroc_u == 27.0 / 30.0);
}

TEST_CASE("bounds") {
  CHECK(Bounds(0.8, 0.9).rbc_lower == doctest::Approx(0.875).epsilon(1e-15));
  for (double a : {0.51, 0.6, 0.75, 0.99, 1.0}) {
    CHECK(Bounds(a, 1.0).rbc_lower == doctest::Approx(1.0).epsilon(1e-15));
  }
  CHECK(Bounds(0.7, 0.7).rbc_lower == doctest::Approx(0.4 / 0.7));
  const auto b = Bounds(0.8, 0.9);
  CHECK(b.phi_pp_lo == doctest::Approx(0.7));
  CHECK(b.phi_pp_hi == doctest::Approx(0.8));
  CHECK(b.phi_pm_hi == doctest::Approx(0.1));
  CHECK(b.phi_mp_hi == doctest::Approx(0.2));
  CHECK(b.phi_mm_hi == doctest::Approx(0.1));
  CHECK(b.phi_pp_lo <= b.phi_pp_hi);

  CHECK(CodeOf([] { Bounds(0.5, 0.6); }) == ErrorCode::kOutOfRegime);
  CHECK(CodeOf([] { Bounds(0.8, 0.7); }) == ErrorCode::kOutOfRegime);
  CHECK(CodeOf([] { Bounds(0.8, 1.1); }) == ErrorCode::kOutOfRegime);
}

TEST_CASE("random in-regime pairs satisfy every bound") {
  std::mt19937_64 rng(19);
  int checked = 0;
  for (int t = 0; t < 2000; ++t) {
    const auto inst = oracle::RandomInstance(4 + rng() % 40, rng);
    const auto pop = ComputePopTable(inst.o, inst.u, inst.y);
    if (!(pop.auroc_o > 0.5 && pop.auroc_o <= pop.auroc_u)) continue;
    ++checked;
    const auto b = Bounds(pop.auroc_o, pop.auroc_u);
    const double rbc = RbcFromPop(pop);
    CHECK(b.rbc_lower <= rbc + 1e-12);
    CHECK(rbc <= 1.0);
    CHECK(b.Contains(pop));
  }
  CHECK(checked > 100);
}

}  // namespace
}  // namespace rankcompat
