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

// Counting how many joint ranking configurations yield a given number of
// pairs ranked correctly by both models.
//
// Given m pairs, m_op of them ranked correctly by the original model and m_up
// by the updated model, the number of ways to place the updated model's
// correct pairs so that exactly k of them overlap the original's is
//
//   nu(k) = C(m_op, k) * C(m - m_op, m_up - k),
//
// the numerator of a hypergeometric pmf. Its mode is
// floor((m_op + 1)(m_up + 1) / (m + 2)).

#ifndef RANKCOMPAT_COMBINATORICS_H_
#define RANKCOMPAT_COMBINATORICS_H_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace rankcompat {

struct PairCountTriple {
  std::int64_t m = 0;
  std::int64_t m_op = 0;
  std::int64_t m_up = 0;

  // Throws InfeasibleCounts unless 0 <= m_op, m_up <= m.
  void Validate() const;
  std::int64_t k_min() const;
  std::int64_t k_max() const;
};

// ln C(n, r); -inf when r is outside [0, n].
double LogChoose(std::int64_t n, std::int64_t r);

// Natural log of nu(k); -inf outside the feasible range.
double LogNu(const PairCountTriple& t, std::int64_t k);

// nu(k) in exact integer arithmetic; empty on 128-bit overflow.
std::optional<unsigned __int128> NuExact(const PairCountTriple& t,
                                         std::int64_t k);

std::int64_t KStar(const PairCountTriple& t);

struct NuPoint {
  std::int64_t k = 0;
  double rbc = 0.0;        // k / m_op
  double log_count = 0.0;  // natural log
};

struct NuCurve {
  double auroc_u = 0.0;
  PairCountTriple counts;
  std::int64_t k_star = 0;
  std::vector<NuPoint> points;
};

// Pair count for an AUROC, rounded to nearest; throws InfeasibleCounts for
// AUROCs outside [0,1].
std::int64_t CountFromAuroc(double auroc, std::int64_t m);

// One curve per updated AUROC over its feasible k range.
std::vector<NuCurve> NuCurves(double auroc_o, std::span<const double> auroc_u,
                              std::int64_t m);

}  // namespace rankcompat

#endif  // RANKCOMPAT_COMBINATORICS_H_
