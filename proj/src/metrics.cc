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

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <vector>

#include "rankcompat/status.h"

namespace rankcompat {
namespace {

void CheckLength(std::size_t a, std::size_t b) {
  if (a != b) {
    throw Error(ErrorCode::kLengthMismatch,
                "lengths " + std::to_string(a) + " and " + std::to_string(b));
  }
}

void CheckScores(std::span<const double> scores) {
  for (double p : scores) {
    if (!std::isfinite(p)) {
      throw Error(ErrorCode::kNonFiniteScore, "risk estimate is not finite");
    }
  }
}

void CheckBinary(std::span<const int> labels) {
  for (int y : labels) {
    if (y != 0 && y != 1) {
      throw Error(ErrorCode::kSchemaError,
                  "binary label expected, got " + std::to_string(y));
    }
  }
}

// Scores split by class, so the pair loops run over two dense arrays.
struct ClassScores {
  std::vector<double> neg_o, pos_o, neg_u, pos_u;
};

ClassScores SplitByClass(std::span<const double> original,
                         std::span<const double> updated,
                         std::span<const int> labels) {
  CheckLength(original.size(), labels.size());
  CheckLength(updated.size(), labels.size());
  CheckScores(original);
  CheckScores(updated);
  CheckBinary(labels);
  ClassScores out;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] == 0) {
      out.neg_o.push_back(original[i]);
      out.neg_u.push_back(updated[i]);
    } else {
      out.pos_o.push_back(original[i]);
      out.pos_u.push_back(updated[i]);
    }
  }
  if (out.neg_o.empty() || out.pos_o.empty()) {
    throw Error(ErrorCode::kSingleClass,
                "both labels must be present to form patient-pairs");
  }
  return out;
}

}  // namespace

PopTable PopTable::FromCounts(std::uint64_t m_pp, std::uint64_t m_pm,
                              std::uint64_t m_mp, std::uint64_t m_mm) {
  PopTable t;
  t.m_pp = m_pp;
  t.m_pm = m_pm;
  t.m_mp = m_mp;
  t.m_mm = m_mm;
  t.m = m_pp + m_pm + m_mp + m_mm;
  if (t.m == 0) return t;
  const double m = static_cast<double>(t.m);
  t.phi_pp = static_cast<double>(m_pp) / m;
  t.phi_pm = static_cast<double>(m_pm) / m;
  t.phi_mp = static_cast<double>(m_mp) / m;
  t.phi_mm = static_cast<double>(m_mm) / m;
  t.auroc_o = static_cast<double>(m_pp + m_pm) / m;
  t.auroc_u = static_cast<double>(m_pp + m_mp) / m;
  return t;
}

bool BoundSet::Contains(const PopTable& pop, double tolerance) const {
  return pop.phi_pp >= phi_pp_lo - tolerance &&
         pop.phi_pp <= phi_pp_hi + tolerance &&
         pop.phi_pm <= phi_pm_hi + tolerance &&
         pop.phi_mp <= phi_mp_hi + tolerance &&
         pop.phi_mm <= phi_mm_hi + tolerance;
}

std::uint64_t CountCorrectPairs(std::span<const double> scores,
                                std::span<const int> labels) {
  CheckLength(scores.size(), labels.size());
  CheckScores(scores);
  CheckBinary(labels);
  std::vector<std::size_t> order(scores.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return scores[a] < scores[b];
  });
  // Walk groups of equal scores; a positive is credited only with negatives
  // from strictly lower groups.
  std::uint64_t negatives_below = 0;
  std::uint64_t correct = 0;
  std::size_t start = 0;
  while (start < order.size()) {
    std::size_t end = start;
    std::uint64_t group_neg = 0, group_pos = 0;
    while (end < order.size() && scores[order[end]] == scores[order[start]]) {
      (labels[order[end]] == 0 ? group_neg : group_pos) += 1;
      ++end;
    }
    correct += group_pos * negatives_below;
    negatives_below += group_neg;
    start = end;
  }
  return correct;
}

double Auroc(std::span<const double> scores, std::span<const int> labels) {
  const std::uint64_t correct = CountCorrectPairs(scores, labels);
  const auto n1 = static_cast<std::uint64_t>(
      std::count(labels.begin(), labels.end(), 1));
  const std::uint64_t n0 = labels.size() - n1;
  if (n0 == 0 || n1 == 0) {
    throw Error(ErrorCode::kSingleClass,
                "AUROC needs at least one label of each class");
  }
  return static_cast<double>(correct) / static_cast<double>(n0 * n1);
}

double Accuracy(std::span<const double> scores, std::span<const int> labels,
                double tau) {
  CheckLength(scores.size(), labels.size());
  if (labels.empty()) throw Error(ErrorCode::kEmptyInput, "no patients");
  std::size_t correct = 0;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    correct += (scores[i] > tau ? 1 : 0) == labels[i];
  }
  return static_cast<double>(correct) / static_cast<double>(labels.size());
}

double Btc(std::span<const double> original, std::span<const double> updated,
           std::span<const int> labels, double tau_o, double tau_u) {
  CheckLength(original.size(), labels.size());
  CheckLength(updated.size(), labels.size());
  std::size_t original_correct = 0, both_correct = 0;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const bool o = (original[i] > tau_o ? 1 : 0) == labels[i];
    const bool u = (updated[i] > tau_u ? 1 : 0) == labels[i];
    original_correct += o;
    both_correct += o && u;
  }
  if (original_correct == 0) {
    throw Error(ErrorCode::kOriginalAllWrong,
                "original model labels no patient correctly");
  }
  return static_cast<double>(both_correct) /
         static_cast<double>(original_correct);
}

PopTable ComputePopTable(std::span<const double> original,
                         std::span<const double> updated,
                         std::span<const int> labels) {
  const ClassScores c = SplitByClass(original, updated, labels);
  std::uint64_t pp = 0, pm = 0, mp = 0, mm = 0;
  for (std::size_t i = 0; i < c.neg_o.size(); ++i) {
    const double oi = c.neg_o[i];
    const double ui = c.neg_u[i];
    std::uint64_t row_pp = 0, row_pm = 0, row_mp = 0;
    for (std::size_t j = 0; j < c.pos_o.size(); ++j) {
      const bool o = oi < c.pos_o[j];
      const bool u = ui < c.pos_u[j];
      row_pp += o & u;
      row_pm += o & !u;
      row_mp += !o & u;
    }
    pp += row_pp;
    pm += row_pm;
    mp += row_mp;
    mm += c.pos_o.size() - row_pp - row_pm - row_mp;
  }
  return PopTable::FromCounts(pp, pm, mp, mm);
}

double RbcFromPop(const PopTable& pop) {
  if (pop.original_correct() == 0) {
    throw Error(ErrorCode::kOriginalNoCorrectPairs,
                "original model ranks no patient-pair correctly");
  }
  return static_cast<double>(pop.m_pp) /
         static_cast<double>(pop.original_correct());
}

double Rbc(std::span<const double> original, std::span<const double> updated,
           std::span<const int> labels) {
  return RbcFromPop(ComputePopTable(original, updated, labels));
}

double RbcGeneral(std::span<const double> original,
                  std::span<const double> updated,
                  std::span<const int> labels) {
  CheckLength(original.size(), labels.size());
  CheckLength(updated.size(), labels.size());
  CheckScores(original);
  CheckScores(updated);
  std::uint64_t ordered = 0, original_correct = 0, both_correct = 0;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    for (std::size_t j = 0; j < labels.size(); ++j) {
      if (!(labels[i] < labels[j])) continue;
      ++ordered;
      if (original[i] < original[j]) {
        ++original_correct;
        both_correct += updated[i] < updated[j];
      }
    }
  }
  if (ordered == 0) {
    throw Error(ErrorCode::kNoOrderedPairs, "all labels are equal");
  }
  if (original_correct == 0) {
    throw Error(ErrorCode::kOriginalNoCorrectPairs,
                "original model ranks no label-ordered pair correctly");
  }
  return static_cast<double>(both_correct) /
         static_cast<double>(original_correct);
}

BoundSet Bounds(double auroc_o, double auroc_u) {
  if (!(auroc_o > 0.5 && auroc_o <= auroc_u && auroc_u <= 1.0)) {
    throw Error(ErrorCode::kOutOfRegime,
                "bounds need 0.5 < AUROC(original) <= AUROC(updated) <= 1, got " +
                    std::to_string(auroc_o) + ", " + std::to_string(auroc_u));
  }
  BoundSet b;
  b.rbc_lower = (auroc_o + auroc_u - 1.0) / auroc_o;
  b.phi_pp_lo = auroc_o + auroc_u - 1.0;
  b.phi_pp_hi = auroc_o;
  b.phi_pm_hi = 1.0 - auroc_u;
  b.phi_mp_hi = 1.0 - auroc_o;
  b.phi_mm_hi = 1.0 - auroc_u;
  return b;
}

}  // namespace rankcompat
