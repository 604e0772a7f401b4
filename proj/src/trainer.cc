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

#include "rankcompat/trainer.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <string>

#include "rankcompat/status.h"

namespace rankcompat {
namespace {

bool HasBothClasses(std::span<const int> labels) {
  bool neg = false, pos = false;
  for (int y : labels) {
    neg |= y == 0;
    pos |= y == 1;
  }
  return neg && pos;
}

}  // namespace

void TrainConfig::Validate() const {
  surrogate.Validate();
  if (!(reg_l2 >= 0.0) || !std::isfinite(reg_l2)) {
    throw Error(ErrorCode::kInvalidConfig, "reg_l2 must be >= 0");
  }
  if (!(learning_rate > 0.0) || !std::isfinite(learning_rate)) {
    throw Error(ErrorCode::kInvalidConfig, "learning_rate must be > 0");
  }
  if (batch_size < 1 || (surrogate.alpha < 1.0 && batch_size < 2)) {
    throw Error(ErrorCode::kInvalidConfig,
                "batch_size must be >= 1, and >= 2 when alpha < 1");
  }
  if (max_epochs < 1 || patience < 1 || patience > max_epochs) {
    throw Error(ErrorCode::kInvalidConfig,
                "need 1 <= patience <= max_epochs");
  }
}

TrainResult TrainWithHistory(const Dataset& dev, const Dataset& val,
                             const RiskModel* original,
                             const TrainConfig& cfg) {
  cfg.Validate();
  if (dev.cols() != val.cols()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "dev has " + std::to_string(dev.cols()) + " columns, val has " +
                    std::to_string(val.cols()));
  }
  if (dev.rows() == 0 || val.rows() == 0) {
    throw Error(ErrorCode::kEmptyInput, "empty dev or val set");
  }
  const bool uses_rank = cfg.surrogate.alpha < 1.0;
  Scores dev_original, val_original;
  if (uses_rank) {
    if (original == nullptr) {
      throw Error(ErrorCode::kMissingOriginal,
                  "alpha < 1 requires the original model's scores");
    }
    dev_original = Predict(*original, dev);
    val_original = Predict(*original, val);
  }

  RiskModel model;
  model.weights.assign(dev.cols(), 0.0);
  model.reg_l2 = cfg.reg_l2;
  model.metadata = {cfg.seed, cfg.surrogate.alpha, 0};

  const SurrogateConfig bce_only{cfg.surrogate.s, 1.0};
  std::mt19937_64 rng(cfg.seed);
  std::vector<std::size_t> order(dev.rows());
  std::iota(order.begin(), order.end(), 0);
  std::vector<double> batch_original;

  TrainResult result;
  result.model = model;
  double best = std::numeric_limits<double>::infinity();
  int since_best = 0;

  for (int epoch = 1; epoch <= cfg.max_epochs; ++epoch) {
    std::shuffle(order.begin(), order.end(), rng);
    for (std::size_t start = 0; start < order.size();
         start += static_cast<std::size_t>(cfg.batch_size)) {
      const std::size_t end =
          std::min(order.size(), start + static_cast<std::size_t>(cfg.batch_size));
      const std::span<const std::size_t> rows(order.data() + start,
                                              end - start);
      const Dataset batch = dev.Subset(rows);
      std::vector<double> grad;
      if (uses_rank && HasBothClasses(batch.labels())) {
        batch_original.clear();
        for (std::size_t r : rows) batch_original.push_back(dev_original[r]);
        grad = ObjectiveGradient(model, batch_original, batch, cfg.surrogate);
      } else {
        // Single-class batches (or alpha == 1) keep only the weighted BCE term.
        grad = ObjectiveGradient(model, {}, batch, bce_only);
        for (double& g : grad) g *= cfg.surrogate.alpha;
      }
      // Proximal step for the L2 term: exact minimizer of the penalty plus
      // the linearized loss, stable for any reg_l2 (a plain gradient step
      // diverges once 2 * learning_rate * reg_l2 > 2).
      const double shrink = 1.0 / (1.0 + 2.0 * cfg.learning_rate * cfg.reg_l2);
      for (std::size_t c = 0; c < model.weights.size(); ++c) {
        model.weights[c] =
            (model.weights[c] - cfg.learning_rate * grad[c]) * shrink;
      }
      model.intercept -= cfg.learning_rate * grad.back();
    }

    model.metadata.epochs_run = epoch;
    const Scores val_scores = Predict(model, val);
    const double objective =
        Objective(val_original, val_scores, val.labels(), cfg.surrogate).total;
    result.validation_objective.push_back(objective);
    if (objective < best) {
      best = objective;
      since_best = 0;
      result.model = model;
      result.best_epoch = epoch;
    } else if (++since_best >= cfg.patience) {
      break;
    }
  }
  result.model.metadata.epochs_run = model.metadata.epochs_run;
  return result;
}

RiskModel Train(const Dataset& dev, const Dataset& val,
                const RiskModel* original, const TrainConfig& cfg) {
  return TrainWithHistory(dev, val, original, cfg).model;
}

}  // namespace rankcompat
