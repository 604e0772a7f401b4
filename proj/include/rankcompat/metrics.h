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

// Exact pair-counting metrics for a model and for an (original, updated)
// model-pair.
//
// A patient-pair is (i, j) with y_i = 0 and y_j = 1. A model ranks it
// correctly iff p_i < p_j strictly; ties are always counted as incorrect.
// Predicted labels use y_hat = 1 iff p > tau.

#ifndef RANKCOMPAT_METRICS_H_
#define RANKCOMPAT_METRICS_H_

#include <cstdint>
#include <span>

namespace rankcompat {

// Joint correctness counts of an (original, updated) model-pair. The first
// sign refers to the original model, the second to the updated model.
struct PopTable {
  std::uint64_t m_pp = 0;
  std::uint64_t m_pm = 0;
  std::uint64_t m_mp = 0;
  std::uint64_t m_mm = 0;
  std::uint64_t m = 0;
  double phi_pp = 0.0;
  double phi_pm = 0.0;
  double phi_mp = 0.0;
  double phi_mm = 0.0;
  double auroc_o = 0.0;
  double auroc_u = 0.0;

  std::uint64_t original_correct() const { return m_pp + m_pm; }
  std::uint64_t updated_correct() const { return m_pp + m_mp; }

  // Fills proportions and both AUROCs from the four counts.
  static PopTable FromCounts(std::uint64_t m_pp, std::uint64_t m_pm,
                             std::uint64_t m_mp, std::uint64_t m_mm);
};

struct BoundSet {
  double rbc_lower = 0.0;
  double phi_pp_lo = 0.0;
  double phi_pp_hi = 0.0;
  double phi_pm_hi = 0.0;
  double phi_mp_hi = 0.0;
  double phi_mm_hi = 0.0;

  // True iff every proportion of `pop` lies inside its interval.
  bool Contains(const PopTable& pop, double tolerance = 1e-12) const;
};

// Number of correctly ranked patient-pairs, in O(n log n).
std::uint64_t CountCorrectPairs(std::span<const double> scores,
                                std::span<const int> labels);

// Fraction of patient-pairs ranked correctly. Throws SingleClass when a class
// is absent.
double Auroc(std::span<const double> scores, std::span<const int> labels);

double Accuracy(std::span<const double> scores, std::span<const int> labels,
                double tau);

// Backwards trust compatibility: of the patients the original model labels
// correctly at tau_o, the fraction the updated model also labels correctly at
// tau_u. Throws OriginalAllWrong on an empty denominator.
double Btc(std::span<const double> original, std::span<const double> updated,
           std::span<const int> labels, double tau_o, double tau_u);

// Rank-based compatibility: of the patient-pairs the original model ranks
// correctly, the fraction the updated model also ranks correctly.
double Rbc(std::span<const double> original, std::span<const double> updated,
           std::span<const int> labels);

// Same ratio over every pair with y_i < y_j, for ordinal labels. Equals Rbc
// on binary labels.
double RbcGeneral(std::span<const double> original,
                  std::span<const double> updated,
                  std::span<const int> labels);

PopTable ComputePopTable(std::span<const double> original,
                         std::span<const double> updated,
                         std::span<const int> labels);

double RbcFromPop(const PopTable& pop);

// Analytic constraints on the proportions given both AUROCs. Valid only for
// 0.5 < auroc_o <= auroc_u <= 1; throws OutOfRegime otherwise.
BoundSet Bounds(double auroc_o, double auroc_u);

}  // namespace rankcompat

#endif  // RANKCOMPAT_METRICS_H_
