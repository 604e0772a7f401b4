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

#include "rankcompat/synth.h"

#include <cmath>
#include <random>
#include <vector>

#include "rankcompat/status.h"

namespace rankcompat {

void SynthConfig::Validate() const {
  if (n < 1 || d < 1) {
    throw Error(ErrorCode::kInvalidConfig, "n and d must be positive");
  }
  if (!(prevalence > 0.0 && prevalence < 1.0)) {
    throw Error(ErrorCode::kInvalidConfig, "prevalence must lie in (0,1)");
  }
  if (!(class_separation >= 0.0) || !std::isfinite(class_separation)) {
    throw Error(ErrorCode::kInvalidConfig, "class_separation must be >= 0");
  }
  if (noise_features > d) {
    throw Error(ErrorCode::kInvalidConfig, "noise_features exceeds d");
  }
  if (!std::isfinite(shift)) {
    throw Error(ErrorCode::kInvalidConfig, "shift must be finite");
  }
}

Dataset Generate(const SynthConfig& cfg) {
  cfg.Validate();
  std::mt19937_64 rng(cfg.seed);
  std::bernoulli_distribution label_dist(cfg.prevalence);
  std::normal_distribution<double> unit(0.0, 1.0);
  const std::size_t informative = cfg.d - cfg.noise_features;
  const double half = cfg.class_separation / 2.0;

  std::vector<int> labels(cfg.n);
  std::vector<double> features(cfg.n * cfg.d);
  for (std::size_t i = 0; i < cfg.n; ++i) {
    labels[i] = label_dist(rng) ? 1 : 0;
    const double mean = labels[i] == 1 ? half : -half;
    for (std::size_t c = 0; c < cfg.d; ++c) {
      features[i * cfg.d + c] = unit(rng) + (c < informative ? mean : 0.0);
    }
  }
  return Dataset(cfg.d, std::move(features), std::move(labels));
}

void ApplyShift(Dataset& data, std::size_t first_col, double magnitude) {
  if (magnitude == 0.0) return;
  const double half = magnitude / 2.0;
  for (std::size_t i = 0; i < data.rows(); ++i) {
    auto row = data.mutable_row(i);
    const double delta = data.labels()[i] == 1 ? half : -half;
    for (std::size_t c = first_col; c < row.size(); ++c) row[c] += delta;
  }
}

}  // namespace rankcompat
