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

#ifndef RANKCOMPAT_DATASET_H_
#define RANKCOMPAT_DATASET_H_

#include <cstddef>
#include <span>
#include <vector>

namespace rankcompat {

// Risk estimates, one per row, each in [0,1].
using Scores = std::vector<double>;

// Dense row-major feature matrix with one integer label per row. Labels are
// {0,1} for every binary metric; ordinal labels are only meaningful for the
// general-form compatibility metric.
class Dataset {
 public:
  Dataset() = default;
  Dataset(std::size_t cols, std::vector<double> features,
          std::vector<int> labels);

  std::size_t rows() const { return labels_.size(); }
  std::size_t cols() const { return cols_; }

  std::span<const double> row(std::size_t i) const {
    return {features_.data() + i * cols_, cols_};
  }
  std::span<double> mutable_row(std::size_t i) {
    return {features_.data() + i * cols_, cols_};
  }

  const std::vector<double>& features() const { return features_; }
  const std::vector<int>& labels() const { return labels_; }

  std::size_t CountLabel(int label) const;
  bool HasBothClasses() const {
    return CountLabel(0) > 0 && CountLabel(1) > 0;
  }

  // Copies the given rows, in the given order (repeats allowed).
  Dataset Subset(std::span<const std::size_t> indices) const;

  bool operator==(const Dataset&) const = default;

 private:
  std::size_t cols_ = 0;
  std::vector<double> features_;
  std::vector<int> labels_;
};

}  // namespace rankcompat

#endif  // RANKCOMPAT_DATASET_H_
