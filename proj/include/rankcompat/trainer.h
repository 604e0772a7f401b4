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

#ifndef RANKCOMPAT_TRAINER_H_
#define RANKCOMPAT_TRAINER_H_

#include <cstdint>
#include <vector>

#include "rankcompat/dataset.h"
#include "rankcompat/model.h"
#include "rankcompat/surrogate.h"

namespace rankcompat {

struct TrainConfig {
  SurrogateConfig surrogate;
  double reg_l2 = 0.01;
  double learning_rate = 0.05;
  int batch_size = 64;
  int max_epochs = 200;
  int patience = 5;
  std::uint64_t seed = 0;

  void Validate() const;
};

struct TrainResult {
  RiskModel model;
  // Validation objective after every completed epoch.
  std::vector<double> validation_objective;
  int best_epoch = 0;  // 1-based index into validation_objective
};

// Mini-batch SGD on alpha * BCE + (1 - alpha) * (1 - soft_rbc) + reg_l2 *
// |w|^2, starting from zero parameters; the L2 term is applied as a proximal
// shrink after each gradient step. Rows are reshuffled every epoch and
// the snapshot with the lowest validation objective (without the L2 term) is
// returned once `patience` epochs pass without improvement.
//
// `original` is required when alpha < 1; its scores on dev and val are
// computed once. With alpha == 1 it is never read.
TrainResult TrainWithHistory(const Dataset& dev, const Dataset& val,
                             const RiskModel* original,
                             const TrainConfig& cfg);

RiskModel Train(const Dataset& dev, const Dataset& val,
                const RiskModel* original, const TrainConfig& cfg);

}  // namespace rankcompat

#endif  // RANKCOMPAT_TRAINER_H_
