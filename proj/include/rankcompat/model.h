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

#ifndef RANKCOMPAT_MODEL_H_
#define RANKCOMPAT_MODEL_H_

#include <cstdint>
#include <span>
#include <vector>

#include "rankcompat/dataset.h"

namespace rankcompat {

struct TrainingMetadata {
  std::uint64_t seed = 0;
  double alpha = 1.0;
  int epochs_run = 0;

  bool operator==(const TrainingMetadata&) const = default;
};

// Linear-logistic risk model: p = 1 / (1 + exp(-(w.x + b))).
struct RiskModel {
  std::vector<double> weights;
  double intercept = 0.0;
  double reg_l2 = 0.0;
  TrainingMetadata metadata;

  std::size_t dim() const { return weights.size(); }

  // Same parameters; metadata is ignored.
  bool SameParameters(const RiskModel& other) const {
    return weights == other.weights && intercept == other.intercept;
  }

  bool operator==(const RiskModel&) const = default;
};

double Logistic(double z);

// Risk estimates for every row. Throws DimensionMismatch when the column
// count differs from the model dimension.
Scores Predict(const RiskModel& model, const Dataset& data);

double Linear(const RiskModel& model, std::span<const double> x);

}  // namespace rankcompat

#endif  // RANKCOMPAT_MODEL_H_
