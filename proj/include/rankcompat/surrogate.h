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

// Differentiable stand-ins for the pair-counting metrics, and the weighted
// training objective
//
//   total = alpha * BCE + (1 - alpha) * (1 - soft_rbc)
//
// where soft_rbc replaces each ranking indicator 1(p_i < p_j) with
// sigmoid(s * (p_j - p_i)). The original model is frozen: only its scores
// enter, never its parameters.

#ifndef RANKCOMPAT_SURROGATE_H_
#define RANKCOMPAT_SURROGATE_H_

#include <span>
#include <vector>

#include "rankcompat/dataset.h"
#include "rankcompat/model.h"

namespace rankcompat {

struct SurrogateConfig {
  double s = 10.0;      // ranking sigmoid sharpness
  double alpha = 1.0;   // weight on binary cross-entropy

  // Throws InvalidConfig unless s > 0 and alpha is in [0,1].
  void Validate() const;
};

struct ObjectiveValue {
  double total = 0.0;
  double bce = 0.0;
  double rank_loss = 0.0;
};

inline constexpr double kBceClamp = 1e-12;

double RankSigmoid(double d, double s);

double RbcSoft(std::span<const double> original,
               std::span<const double> updated, std::span<const int> labels,
               double s);

// Mean binary cross-entropy with scores clamped to [1e-12, 1 - 1e-12].
double BinaryCrossEntropy(std::span<const double> scores,
                          std::span<const int> labels);

// `original` may be empty when alpha == 1; rank_loss is then reported as 0.
ObjectiveValue Objective(std::span<const double> original,
                         std::span<const double> updated,
                         std::span<const int> labels,
                         const SurrogateConfig& cfg);

// Gradient of Objective() with respect to (weights..., intercept) of the
// updated model, evaluated on `batch`. `original` holds the frozen original
// model's scores on the batch rows. The result has length dim() + 1.
std::vector<double> ObjectiveGradient(const RiskModel& model,
                                      std::span<const double> original,
                                      const Dataset& batch,
                                      const SurrogateConfig& cfg);

}  // namespace rankcompat

#endif  // RANKCOMPAT_SURROGATE_H_
