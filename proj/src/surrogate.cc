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

#include "rankcompat/surrogate.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "rankcompat/status.h"

namespace rankcompat {
namespace {

void CheckLength(std::size_t a, std::size_t b) {
  if (a != b) {
    throw Error(ErrorCode::kLengthMismatch,
                "lengths " + std::to_string(a) + " and " + std::to_string(b));
  }
}

void CheckFinite(std::span<const double> scores) {
  for (double p : scores) {
    if (!std::isfinite(p)) {
      throw Error(ErrorCode::kNonFiniteScore, "risk estimate is not finite");
    }
  }
}

struct PairIndex {
  std::vector<std::size_t> neg, pos;
};

PairIndex IndexByClass(std::span<const int> labels) {
  PairIndex idx;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    (labels[i] == 0 ? idx.neg : idx.pos).push_back(i);
  }
  if (idx.neg.empty() || idx.pos.empty()) {
    throw Error(ErrorCode::kSingleClass,
                "soft compatibility needs both labels present");
  }
  return idx;
}

// Numerator and denominator of the soft compatibility ratio.
struct SoftSums {
  double numerator = 0.0;
  double denominator = 0.0;
};

SoftSums SoftRbcSums(std::span<const double> original,
                     std::span<const double> updated, const PairIndex& idx,
                     double s) {
  SoftSums sums;
  for (std::size_t i : idx.neg) {
    for (std::size_t j : idx.pos) {
      const double a = RankSigmoid(original[j] - original[i], s);
      sums.numerator += a * RankSigmoid(updated[j] - updated[i], s);
      sums.denominator += a;
    }
  }
  if (!(sums.denominator > 0.0)) {
    throw Error(ErrorCode::kOriginalNoCorrectPairs,
                "ranking sigmoid weights of the original model underflow to 0");
  }
  return sums;
}

}  // namespace

void SurrogateConfig::Validate() const {
  if (!(s > 0.0) || !std::isfinite(s)) {
    throw Error(ErrorCode::kInvalidConfig, "sigmoid sharpness must be > 0");
  }
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw Error(ErrorCode::kInvalidConfig, "alpha must lie in [0,1]");
  }
}

double RankSigmoid(double d, double s) { return Logistic(s * d); }

double RbcSoft(std::span<const double> original,
               std::span<const double> updated, std::span<const int> labels,
               double s) {
  CheckLength(original.size(), labels.size());
  CheckLength(updated.size(), labels.size());
  CheckFinite(original);
  CheckFinite(updated);
  const SoftSums sums =
      SoftRbcSums(original, updated, IndexByClass(labels), s);
  return sums.numerator / sums.denominator;
}

double BinaryCrossEntropy(std::span<const double> scores,
                          std::span<const int> labels) {
  CheckLength(scores.size(), labels.size());
  CheckFinite(scores);
  if (labels.empty()) throw Error(ErrorCode::kEmptyInput, "no patients");
  double sum = 0.0;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const double p = std::clamp(scores[i], kBceClamp, 1.0 - kBceClamp);
    sum -= labels[i] == 1 ? std::log(p) : std::log1p(-p);
  }
  return sum / static_cast<double>(labels.size());
}

ObjectiveValue Objective(std::span<const double> original,
                         std::span<const double> updated,
                         std::span<const int> labels,
                         const SurrogateConfig& cfg) {
  cfg.Validate();
  ObjectiveValue v;
  v.bce = BinaryCrossEntropy(updated, labels);
  // With alpha == 1 the rank term carries no weight; it is still reported
  // when original scores are supplied and both classes are present.
  const bool reportable = !original.empty() &&
                          std::count(labels.begin(), labels.end(), 0) > 0 &&
                          std::count(labels.begin(), labels.end(), 1) > 0;
  if (cfg.alpha < 1.0 || reportable) {
    v.rank_loss = 1.0 - RbcSoft(original, updated, labels, cfg.s);
  }
  v.total = cfg.alpha * v.bce + (1.0 - cfg.alpha) * v.rank_loss;
  return v;
}

std::vector<double> ObjectiveGradient(const RiskModel& model,
                                      std::span<const double> original,
                                      const Dataset& batch,
                                      const SurrogateConfig& cfg) {
  cfg.Validate();
  const Scores updated = Predict(model, batch);
  const auto labels = std::span<const int>(batch.labels());
  const std::size_t n = batch.rows();
  if (n == 0) throw Error(ErrorCode::kEmptyInput, "empty batch");

  // d objective / d score, per row.
  std::vector<double> d_score(n, 0.0);
  // d BCE / d logit is (p - y) / n; fold it in after the chain rule below.
  std::vector<double> d_logit(n, 0.0);
  for (std::size_t k = 0; k < n; ++k) {
    d_logit[k] = cfg.alpha * (updated[k] - labels[k]) / static_cast<double>(n);
  }

  if (cfg.alpha < 1.0) {
    CheckLength(original.size(), n);
    CheckFinite(original);
    const PairIndex idx = IndexByClass(labels);
    const SoftSums sums = SoftRbcSums(original, updated, idx, cfg.s);
    // rank_loss = 1 - N/D with D fixed, so d rank_loss = -dN / D.
    const double scale = -(1.0 - cfg.alpha) * cfg.s / sums.denominator;
    for (std::size_t i : idx.neg) {
      for (std::size_t j : idx.pos) {
        const double a = RankSigmoid(original[j] - original[i], cfg.s);
        const double su = RankSigmoid(updated[j] - updated[i], cfg.s);
        const double g = scale * a * su * (1.0 - su);
        d_score[j] += g;
        d_score[i] -= g;
      }
    }
  }

  std::vector<double> grad(model.dim() + 1, 0.0);
  for (std::size_t k = 0; k < n; ++k) {
    const double g =
        d_logit[k] + d_score[k] * updated[k] * (1.0 - updated[k]);
    if (g == 0.0) continue;
    const auto x = batch.row(k);
    for (std::size_t c = 0; c < x.size(); ++c) grad[c] += g * x[c];
    grad.back() += g;
  }
  return grad;
}

}  // namespace rankcompat
