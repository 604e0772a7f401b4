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

#include "rankcompat/combinatorics.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "rankcompat/status.h"

namespace rankcompat {
namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

std::optional<unsigned __int128> ChooseExact(std::int64_t n, std::int64_t r) {
  if (r < 0 || r > n) return 0;
  r = std::min(r, n - r);
  unsigned __int128 c = 1;
  const auto limit = ~static_cast<unsigned __int128>(0);
  for (std::int64_t i = 1; i <= r; ++i) {
    // c * (n - r + i) / i stays integral at every step.
    const auto factor = static_cast<unsigned __int128>(n - r + i);
    if (c > limit / factor) return std::nullopt;
    c = c * factor / static_cast<unsigned __int128>(i);
  }
  return c;
}

}  // namespace

void PairCountTriple::Validate() const {
  if (m < 0 || m_op < 0 || m_up < 0 || m_op > m || m_up > m) {
    throw Error(ErrorCode::kInfeasibleCounts,
                "need 0 <= m_op, m_up <= m; got m=" + std::to_string(m) +
                    " m_op=" + std::to_string(m_op) +
                    " m_up=" + std::to_string(m_up));
  }
}

std::int64_t PairCountTriple::k_min() const {
  return std::max<std::int64_t>(0, m_op + m_up - m);
}

std::int64_t PairCountTriple::k_max() const { return std::min(m_op, m_up); }

double LogChoose(std::int64_t n, std::int64_t r) {
  if (r < 0 || r > n) return kNegInf;
  if (r == 0 || r == n) return 0.0;
  return std::lgamma(static_cast<double>(n) + 1.0) -
         std::lgamma(static_cast<double>(r) + 1.0) -
         std::lgamma(static_cast<double>(n - r) + 1.0);
}

double LogNu(const PairCountTriple& t, std::int64_t k) {
  t.Validate();
  if (k < t.k_min() || k > t.k_max()) return kNegInf;
  return LogChoose(t.m_op, k) + LogChoose(t.m - t.m_op, t.m_up - k);
}

std::optional<unsigned __int128> NuExact(const PairCountTriple& t,
                                         std::int64_t k) {
  t.Validate();
  if (k < t.k_min() || k > t.k_max()) return 0;
  const auto a = ChooseExact(t.m_op, k);
  const auto b = ChooseExact(t.m - t.m_op, t.m_up - k);
  if (!a || !b) return std::nullopt;
  if (*b != 0 && *a > ~static_cast<unsigned __int128>(0) / *b) {
    return std::nullopt;
  }
  return *a * *b;
}

std::int64_t KStar(const PairCountTriple& t) {
  t.Validate();
  if (t.m < 1) {
    throw Error(ErrorCode::kInfeasibleCounts, "k* needs at least one pair");
  }
  return (t.m_op + 1) * (t.m_up + 1) / (t.m + 2);
}

std::int64_t CountFromAuroc(double auroc, std::int64_t m) {
  if (!std::isfinite(auroc) || auroc < 0.0 || auroc > 1.0 || m < 1) {
    throw Error(ErrorCode::kInfeasibleCounts,
                "AUROC " + std::to_string(auroc) + " with m=" +
                    std::to_string(m) + " gives no valid pair count");
  }
  return std::llround(auroc * static_cast<double>(m));
}

std::vector<NuCurve> NuCurves(double auroc_o, std::span<const double> auroc_u,
                              std::int64_t m) {
  const std::int64_t m_op = CountFromAuroc(auroc_o, m);
  if (m_op == 0) {
    throw Error(ErrorCode::kInfeasibleCounts,
                "original model ranks no pair correctly");
  }
  std::vector<NuCurve> curves;
  for (double au : auroc_u) {
    NuCurve curve;
    curve.auroc_u = au;
    curve.counts = {m, m_op, CountFromAuroc(au, m)};
    curve.k_star = KStar(curve.counts);
    for (std::int64_t k = curve.counts.k_min(); k <= curve.counts.k_max();
         ++k) {
      curve.points.push_back({k,
                              static_cast<double>(k) / static_cast<double>(m_op),
                              LogNu(curve.counts, k)});
    }
    curves.push_back(std::move(curve));
  }
  return curves;
}

}  // namespace rankcompat
