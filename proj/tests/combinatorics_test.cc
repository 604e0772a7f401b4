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

#include "rankcompat/combinatorics.h"

#include <cmath>
#include <limits>
#include <random>
#include <vector>

#include "doctest.h"
#include "oracles.h"
#include "rankcompat/status.h"
#include "test_util.h"

namespace rankcompat {
namespace {

using testing::CodeOf;

double LogSumExp(const std::vector<double>& v) {
  double hi = -std::numeric_limits<double>::infinity();
  for (double x : v) hi = std::max(hi, x);
  double sum = 0;
  for (double x : v) sum += std::exp(x - hi);
  return hi + std::log(sum);
}

TEST_CASE("log_nu on the toy instance") {
  const PairCountTriple t{4, 2, 2};
  CHECK(LogNu(t, 1) == doctest::Approx(std::log(4.0)).epsilon(1e-14));
  CHECK(LogNu(t, 0) == doctest::Approx(0.0));
  CHECK(LogNu(t, 2) == doctest::Approx(0.0));
  CHECK(LogNu(t, 3) == -std::numeric_limits<double>::infinity());
  CHECK(LogNu(t, -1) == -std::numeric_limits<double>::infinity());
  double sum = 0;
  for (std::int64_t k = 0; k <= 2; ++k) sum += std::exp(LogNu(t, k));
  CHECK(sum == doctest::Approx(6.0).epsilon(1e-12));
  CHECK(*NuExact(t, 0) == 1);
  CHECK(*NuExact(t, 1) == 4);
  CHECK(*NuExact(t, 2) == 1);
  CHECK(*NuExact(t, 5) == 0);
  // Feasible range is clipped below when the correct sets must overlap.
  const PairCountTriple tight{10, 7, 6};
  CHECK(tight.k_min() == 3);
  CHECK(tight.k_max() == 6);
  CHECK(LogNu(tight, 2) == -std::numeric_limits<double>::infinity());
}

TEST_CASE("k_star") {
  CHECK(KStar({400, 260, 320}) == 208);
  CHECK(KStar({4, 2, 2}) == 1);
  for (std::int64_t m : {1, 5, 30, 400}) {
    for (std::int64_t op = 0; op <= m; op += std::max<std::int64_t>(1, m / 7)) {
      CHECK(KStar({m, op, m}) == op);
    }
  }
  CHECK(CodeOf([] { KStar({0, 0, 0}); }) == ErrorCode::kInfeasibleCounts);
}

TEST_CASE("triple validation") {
  CHECK(CodeOf([] { LogNu({10, 11, 3}, 1); }) == ErrorCode::kInfeasibleCounts);
  CHECK(CodeOf([] { LogNu({10, 3, -1}, 1); }) == ErrorCode::kInfeasibleCounts);
  CHECK(CodeOf([] { CountFromAuroc(1.2, 400); }) ==
        ErrorCode::kInfeasibleCounts);
  CHECK(CodeOf([] { CountFromAuroc(-0.1, 400); }) ==
        ErrorCode::kInfeasibleCounts);
  CHECK(CountFromAuroc(0.65, 400) == 260);
  CHECK(CountFromAuroc(0.6666, 3) == 2);
}

TEST_CASE("vandermonde identity, exactly, for small m") {
  const auto pascal = oracle::Pascal(30);
  for (std::int64_t m = 0; m <= 30; ++m) {
    for (std::int64_t op = 0; op <= m; ++op) {
      for (std::int64_t up = 0; up <= m; ++up) {
        unsigned __int128 sum = 0;
        for (std::int64_t k = 0; k <= m; ++k) sum += *NuExact({m, op, up}, k);
        CHECK(sum == pascal[m][up]);
      }
    }
  }
}

TEST_CASE("vandermonde identity in log space") {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 200; ++t) {
    const std::int64_t m = 1 + static_cast<std::int64_t>(rng() % 2000);
    const PairCountTriple tr{m, static_cast<std::int64_t>(rng() % (m + 1)),
                             static_cast<std::int64_t>(rng() % (m + 1))};
    std::vector<double> logs;
    for (std::int64_t k = tr.k_min(); k <= tr.k_max(); ++k) {
      logs.push_back(LogNu(tr, k));
    }
    const double expected = LogChoose(m, tr.m_up);
    const double got = LogSumExp(logs);
    CHECK(std::abs(got - expected) <=
          1e-9 * std::max(1.0, std::abs(expected)));
  }
}

TEST_CASE("k_star is a mode") {
  std::mt19937_64 rng(37);
  for (int t = 0; t < 300; ++t) {
    const std::int64_t m = 1 + static_cast<std::int64_t>(rng() % 1000);
    const PairCountTriple tr{m, static_cast<std::int64_t>(rng() % (m + 1)),
                             static_cast<std::int64_t>(rng() % (m + 1))};
    const std::int64_t ks = KStar(tr);
    REQUIRE(ks >= tr.k_min());
    REQUIRE(ks <= tr.k_max());
    const double best = LogNu(tr, ks);
    for (std::int64_t k = tr.k_min(); k <= tr.k_max(); ++k) {
      // Two adjacent modes are equal in exact arithmetic; allow rounding.
      CHECK(best >= LogNu(tr, k) - 1e-12 * std::max(1.0, std::abs(best)));
    }
  }
  // Exact check where the counts fit in 128 bits.
  for (int t = 0; t < 300; ++t) {
    const std::int64_t m = 1 + static_cast<std::int64_t>(rng() % 100);
    const PairCountTriple tr{m, static_cast<std::int64_t>(rng() % (m + 1)),
                             static_cast<std::int64_t>(rng() % (m + 1))};
    const auto best = *NuExact(tr, KStar(tr));
    for (std::int64_t k = tr.k_min(); k <= tr.k_max(); ++k) {
      CHECK(best >= *NuExact(tr, k));
    }
  }
}

TEST_CASE("normalized nu is symmetric in the two correct counts") {
  // nu itself is not: m=4, counts (1,2) vs (2,1) at k=1 give 3 vs 2. The
  // hypergeometric pmf nu(k) / C(m, m_up) is.
  CHECK(*NuExact({4, 1, 2}, 1) == 3);
  CHECK(*NuExact({4, 2, 1}, 1) == 2);
  std::mt19937_64 rng(41);
  for (int t = 0; t < 200; ++t) {
    const std::int64_t m = 1 + static_cast<std::int64_t>(rng() % 500);
    const auto a = static_cast<std::int64_t>(rng() % (m + 1));
    const auto b = static_cast<std::int64_t>(rng() % (m + 1));
    for (std::int64_t k = -1; k <= std::min(a, b) + 1; k += 1 + m / 50) {
      const double x = LogNu({m, a, b}, k) - LogChoose(m, b);
      const double y = LogNu({m, b, a}, k) - LogChoose(m, a);
      if (std::isinf(x)) {
        CHECK(x == y);
      } else {
        CHECK(std::abs(x - y) <= 1e-9 * std::max(1.0, std::abs(x)));
      }
    }
  }
}

TEST_CASE("nu curves") {
  const std::vector<double> au{0.65, 0.75, 0.85, 0.95};
  const auto curves = NuCurves(0.65, au, 400);
  REQUIRE(curves.size() == 4);
  for (const auto& c : curves) {
    CHECK(c.counts.m_op == 260);
    std::size_t peak = 0;
    for (std::size_t i = 0; i < c.points.size(); ++i) {
      if (c.points[i].log_count > c.points[peak].log_count) peak = i;
      CHECK(c.points[i].rbc == static_cast<double>(c.points[i].k) / 260.0);
    }
    CHECK(std::abs(c.points[peak].rbc - c.auroc_u) <= 1.0 / 260.0 + 1e-12);
    CHECK(c.points[peak].k == c.k_star);
  }

  const std::vector<double> perfect{1.0};
  const auto one = NuCurves(0.65, perfect, 400);
  REQUIRE(one[0].points.size() == 1);
  CHECK(one[0].points[0].rbc == 1.0);

  const std::vector<double> half{0.5};
  const auto toy = NuCurves(0.5, half, 4);
  REQUIRE(toy[0].points.size() == 3);
  CHECK(std::exp(toy[0].points[0].log_count) == doctest::Approx(1.0));
  CHECK(std::exp(toy[0].points[1].log_count) == doctest::Approx(4.0));
  CHECK(std::exp(toy[0].points[2].log_count) == doctest::Approx(1.0));

  CHECK(CodeOf([&] { NuCurves(0.0, au, 400); }) ==
        ErrorCode::kInfeasibleCounts);
  const std::vector<double> bad{1.5};
  CHECK(CodeOf([&] { NuCurves(0.65, bad, 400); }) ==
        ErrorCode::kInfeasibleCounts);
}

}  // namespace
}  // namespace rankcompat
