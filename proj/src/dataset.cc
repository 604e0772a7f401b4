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

#include "rankcompat/dataset.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "rankcompat/status.h"

namespace rankcompat {

Dataset::Dataset(std::size_t cols, std::vector<double> features,
                 std::vector<int> labels)
    : cols_(cols), features_(std::move(features)), labels_(std::move(labels)) {
  if (features_.size() != cols_ * labels_.size()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "feature buffer holds " + std::to_string(features_.size()) +
                    " values, expected " +
                    std::to_string(cols_ * labels_.size()));
  }
  for (double v : features_) {
    if (!std::isfinite(v)) {
      throw Error(ErrorCode::kNonFiniteScore, "non-finite feature value");
    }
  }
}

std::size_t Dataset::CountLabel(int label) const {
  return static_cast<std::size_t>(
      std::count(labels_.begin(), labels_.end(), label));
}

Dataset Dataset::Subset(std::span<const std::size_t> indices) const {
  std::vector<double> features;
  std::vector<int> labels;
  features.reserve(indices.size() * cols_);
  labels.reserve(indices.size());
  for (std::size_t i : indices) {
    auto r = row(i);
    features.insert(features.end(), r.begin(), r.end());
    labels.push_back(labels_[i]);
  }
  Dataset out;
  out.cols_ = cols_;
  out.features_ = std::move(features);
  out.labels_ = std::move(labels);
  return out;
}

}  // namespace rankcompat
