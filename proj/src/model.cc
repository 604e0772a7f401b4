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

#include "rankcompat/model.h"

#include <cmath>
#include <string>

#include "rankcompat/status.h"

namespace rankcompat {

double Logistic(double z) {
  if (z >= 0) return 1.0 / (1.0 + std::exp(-z));
  const double e = std::exp(z);
  return e / (1.0 + e);
}

double Linear(const RiskModel& model, std::span<const double> x) {
  double z = model.intercept;
  for (std::size_t k = 0; k < x.size(); ++k) z += model.weights[k] * x[k];
  return z;
}

Scores Predict(const RiskModel& model, const Dataset& data) {
  if (data.cols() != model.dim()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "model has " + std::to_string(model.dim()) +
                    " weights, data has " + std::to_string(data.cols()) +
                    " columns");
  }
  Scores out(data.rows());
  for (std::size_t i = 0; i < data.rows(); ++i) {
    out[i] = Logistic(Linear(model, data.row(i)));
  }
  return out;
}

}  // namespace rankcompat
