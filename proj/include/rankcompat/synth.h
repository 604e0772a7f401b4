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

#ifndef RANKCOMPAT_SYNTH_H_
#define RANKCOMPAT_SYNTH_H_

#include <cstddef>
#include <cstdint>

#include "rankcompat/dataset.h"

namespace rankcompat {

// Binary-label data with class-conditional unit-variance Gaussian features.
// The first d - noise_features columns are informative with means
// -class_separation/2 (y=0) and +class_separation/2 (y=1); the remaining
// columns are standard normal regardless of the label.
struct SynthConfig {
  std::size_t n = 8577;
  std::size_t d = 50;
  double prevalence = 0.15;
  double class_separation = 0.3;
  std::size_t noise_features = 25;
  // Class-conditional mean shift applied to the noise columns of the
  // updated-model and evaluation partitions (see ApplyShift).
  double shift = 0.0;
  std::uint64_t seed = 0;

  void Validate() const;
};

Dataset Generate(const SynthConfig& cfg);

// Moves the class-conditional means of columns [first_col, cols) to
// -magnitude/2 (y=0) and +magnitude/2 (y=1), so they carry signal that a
// model fit on unshifted rows has not seen.
void ApplyShift(Dataset& data, std::size_t first_col, double magnitude);

}  // namespace rankcompat

#endif  // RANKCOMPAT_SYNTH_H_
