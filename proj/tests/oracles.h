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

// Reference implementations used only by tests. They are deliberately
// naive and share no code with the library.

#ifndef RANKCOMPAT_TESTS_ORACLES_H_
#define RANKCOMPAT_TESTS_ORACLES_H_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <vector>

namespace rankcompat::oracle {

// Mann-Whitney U from rank sums with midranks; returns U / (n0 * n1).
// Ranks are doubled so tie-free inputs stay in integer arithmetic.
inline double RankSumAuroc(const std::vector<double>& p,
                           const std::vector<int>& y) {
  const std::size_t n = p.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return p[a] < p[b]; });
  std::vector<std::uint64_t> rank2(n);  // 2 * midrank
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j + 1 < n && p[order[j + 1]] == p[order[i]]) ++j;
    // positions i..j share ranks i+1..j+1; midrank*2 = i+j+2
    for (std::size_t k = i; k <= j; ++k) rank2[order[k]] = i + j + 2;
    i = j + 1;
  }
  std::uint64_t r1 = 0, n1 = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (y[i] == 1) r1 += rank2[i], ++n1;
  }
  const std::uint64_t n0 = n - n1;
  const std::uint64_t u2 = r1 - n1 * (n1 + 1);  // 2U
  return static_cast<double>(u2 / 2) / static_cast<double>(n0 * n1);
}

struct PairCounts {
  std::uint64_t pp = 0, pm = 0, mp = 0, mm = 0;
  std::uint64_t total() const { return pp + pm + mp + mm; }
};

// Every (negative, positive) pair, classified by who ranks it correctly.
inline PairCounts BrutePairs(const std::vector<double>& o,
                             const std::vector<double>& u,
                             const std::vector<int>& y) {
  PairCounts c;
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (y[i] != 0) continue;
    for (std::size_t j = 0; j < y.size(); ++j) {
      if (y[j] != 1) continue;
      const bool oc = o[i] < o[j];
      const bool uc = u[i] < u[j];
      if (oc && uc) ++c.pp;
      else if (oc) ++c.pm;
      else if (uc) ++c.mp;
      else ++c.mm;
    }
  }
  return c;
}

// Same ratio over every pair with y_i < y_j.
inline double BruteRbcOrdinal(const std::vector<double>& o,
                              const std::vector<double>& u,
                              const std::vector<int>& y) {
  std::uint64_t both = 0, orig = 0;
  for (std::size_t i = 0; i < y.size(); ++i) {
    for (std::size_t j = 0; j < y.size(); ++j) {
      if (!(y[i] < y[j])) continue;
      if (o[i] < o[j]) {
        ++orig;
        if (u[i] < u[j]) ++both;
      }
    }
  }
  return static_cast<double>(both) / static_cast<double>(orig);
}

inline double Sigmoid(double x) {
  if (x >= 0) return 1.0 / (1.0 + std::exp(-x));
  const double e = std::exp(x);
  return e / (1.0 + e);
}

inline double SoftRbc(const std::vector<double>& o,
                      const std::vector<double>& u, const std::vector<int>& y,
                      double s) {
  double num = 0, den = 0;
  for (std::size_t i = 0; i < y.size(); ++i) {
    for (std::size_t j = 0; j < y.size(); ++j) {
      if (y[i] == 0 && y[j] == 1) {
        const double a = Sigmoid(s * (o[j] - o[i]));
        num += a * Sigmoid(s * (u[j] - u[i]));
        den += a;
      }
    }
  }
  return num / den;
}

inline double MeanBce(const std::vector<double>& p, const std::vector<int>& y) {
  double sum = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    sum += y[i] ? -std::log(p[i]) : -std::log(1 - p[i]);
  }
  return sum / static_cast<double>(p.size());
}

// Central differences of f at x with step h.
inline std::vector<double> CentralDifference(
    const std::function<double(const std::vector<double>&)>& f,
    std::vector<double> x, double h) {
  std::vector<double> g(x.size());
  for (std::size_t k = 0; k < x.size(); ++k) {
    const double x0 = x[k];
    x[k] = x0 + h;
    const double fp = f(x);
    x[k] = x0 - h;
    const double fm = f(x);
    x[k] = x0;
    g[k] = (fp - fm) / (2 * h);
  }
  return g;
}

// Pascal's triangle up to row n in 128-bit integers (exact for n <= 120).
inline std::vector<std::vector<unsigned __int128>> Pascal(int n) {
  std::vector<std::vector<unsigned __int128>> c(n + 1);
  for (int i = 0; i <= n; ++i) {
    c[i].assign(i + 1, 1);
    for (int k = 1; k < i; ++k) c[i][k] = c[i - 1][k - 1] + c[i - 1][k];
  }
  return c;
}

// Random binary instance with both classes and distinct scores in (0,1).
// Distinctness is across both vectors' own entries separately.
struct Instance {
  std::vector<int> y;
  std::vector<double> o, u;
};

inline std::vector<double> DistinctScores(std::size_t n, std::mt19937_64& rng,
                                          double min_gap = 0.0) {
  // Sorted uniforms on a shortened interval, spread apart by min_gap, then
  // shuffled: uniform over score sets whose gaps all reach min_gap.
  const double span = 1.0 - min_gap * static_cast<double>(n + 1);
  std::uniform_real_distribution<double> unif(0.0, span);
  for (;;) {
    std::vector<double> v(n);
    for (auto& x : v) x = unif(rng);
    std::sort(v.begin(), v.end());
    bool distinct = true;
    for (std::size_t i = 0; i < n; ++i) {
      v[i] += min_gap * static_cast<double>(i + 1);
      if (i > 0 && !(v[i] - v[i - 1] >= min_gap)) distinct = false;
      if (i > 0 && v[i] == v[i - 1]) distinct = false;
    }
    if (!distinct) continue;
    std::shuffle(v.begin(), v.end(), rng);
    return v;
  }
}

inline Instance RandomInstance(std::size_t n, std::mt19937_64& rng,
                               double min_gap = 0.0) {
  Instance inst;
  std::bernoulli_distribution coin(0.4);
  do {
    inst.y.assign(n, 0);
    for (auto& v : inst.y) v = coin(rng) ? 1 : 0;
  } while (std::count(inst.y.begin(), inst.y.end(), 1) == 0 ||
           std::count(inst.y.begin(), inst.y.end(), 0) == 0);
  inst.o = DistinctScores(n, rng, min_gap);
  inst.u = DistinctScores(n, rng, min_gap);
  return inst;
}

}  // namespace rankcompat::oracle

#endif  // RANKCOMPAT_TESTS_ORACLES_H_
