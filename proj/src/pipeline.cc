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

#include "rankcompat/pipeline.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <numeric>
#include <random>
#include <string>
#include <thread>

#include "rankcompat/status.h"
#include "rankcompat/synth.h"

namespace rankcompat {
namespace {

// Stream tags for DeriveSeed.
enum SeedTag : std::uint64_t {
  kTrainTag = 1,
  kBootstrapTag = 2,
  kOriginalTag = 3,
  kSplitTag = 4,
  kCandidateTag = 5,
  kReplicationTag = 6,
};

std::uint64_t SplitMix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

TrainConfig WithOverrides(const TrainConfig& base, double reg, double alpha,
                          std::uint64_t seed) {
  TrainConfig cfg = base;
  cfg.reg_l2 = reg;
  cfg.surrogate.alpha = alpha;
  cfg.seed = seed;
  return cfg;
}

void RequireBothClasses(const Dataset& data, const char* what) {
  if (!data.HasBothClasses()) {
    throw Error(ErrorCode::kSingleClass,
                std::string(what) + " does not contain both labels");
  }
}

CandidateEval Evaluate(std::span<const double> original_val,
                       std::span<const double> original_eval,
                       const RiskModel& model, const Partitions& parts,
                       const ExperimentConfig& cfg) {
  CandidateEval e;
  const Scores val = Predict(model, parts.upd_val);
  const PopTable val_pop =
      ComputePopTable(original_val, val, parts.upd_val.labels());
  e.val_auroc = val_pop.auroc_u;
  e.val_rbc = RbcFromPop(val_pop);

  const Scores eval = Predict(model, parts.eval);
  const PopTable pop = ComputePopTable(original_eval, eval, parts.eval.labels());
  e.auroc = pop.auroc_u;
  e.rbc = RbcFromPop(pop);
  e.phi_pp = pop.phi_pp;
  try {
    e.btc = Btc(original_eval, eval, parts.eval.labels(), cfg.eval_tau_o,
                cfg.eval_tau_u);
  } catch (const Error& err) {
    if (err.code() != ErrorCode::kOriginalAllWrong) throw;
  }
  if (pop.auroc_o > 0.5 && pop.auroc_o <= pop.auroc_u) {
    e.rbc_lower = Bounds(pop.auroc_o, pop.auroc_u).rbc_lower;
  }
  return e;
}

std::size_t BinCount(double bin) {
  const double ratio = 1.0 / bin;
  const double nearest = std::round(ratio);
  if (std::abs(ratio - nearest) < 1e-9) return static_cast<std::size_t>(nearest);
  return static_cast<std::size_t>(std::ceil(ratio));
}

}  // namespace

std::uint64_t DeriveSeed(std::uint64_t base, std::uint64_t a,
                         std::uint64_t b) {
  return SplitMix64(SplitMix64(SplitMix64(base) ^ a) ^ (b * 0xd6e8feb86659fd93ULL));
}

std::vector<double> Grid(double start, double end, double step) {
  if (!(step > 0.0) || !std::isfinite(start) || !std::isfinite(end) ||
      end < start) {
    throw Error(ErrorCode::kInvalidConfig, "grid needs start <= end, step > 0");
  }
  const auto count =
      static_cast<std::size_t>(std::floor((end - start) / step + 1e-9)) + 1;
  std::vector<double> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    // Snap to 12 decimals so 0.1-steps print as 0.3 rather than
    // 0.30000000000000004.
    out.push_back(std::round((start + static_cast<double>(i) * step) * 1e12) /
                  1e12);
  }
  return out;
}

void SplitSpec::Validate(std::size_t n) const {
  if (!(dev_fraction > 0.0 && dev_fraction < 1.0)) {
    throw Error(ErrorCode::kInvalidConfig, "dev_fraction must lie in (0,1)");
  }
  if (n_original < 2 || n_updated < 2) {
    throw Error(ErrorCode::kInvalidConfig,
                "each model partition needs at least 2 rows");
  }
  if (n_original + n_updated >= n) {
    throw Error(ErrorCode::kSpecTooLarge,
                std::to_string(n_original) + " + " + std::to_string(n_updated) +
                    " rows leave no evaluation rows out of " +
                    std::to_string(n));
  }
}

SplitIndices SplitRows(std::size_t n, const SplitSpec& spec,
                       std::uint64_t seed) {
  spec.Validate(n);
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::mt19937_64 rng(seed);
  std::shuffle(order.begin(), order.end(), rng);

  SplitIndices out;
  auto take = [&, pos = std::size_t{0}](std::vector<std::size_t>& dst,
                                         std::size_t count) mutable {
    dst.assign(order.begin() + static_cast<std::ptrdiff_t>(pos),
               order.begin() + static_cast<std::ptrdiff_t>(pos + count));
    pos += count;
  };
  const auto dev_size = [&](std::size_t total) {
    const auto dev = static_cast<std::size_t>(
        std::floor(static_cast<double>(total) * spec.dev_fraction));
    return std::clamp<std::size_t>(dev, 1, total - 1);
  };
  const std::size_t od = dev_size(spec.n_original);
  const std::size_t ud = dev_size(spec.n_updated);
  take(out.orig_dev, od);
  take(out.orig_val, spec.n_original - od);
  take(out.upd_dev, ud);
  take(out.upd_val, spec.n_updated - ud);
  take(out.eval, n - spec.n_original - spec.n_updated);
  return out;
}

Partitions Split(const Dataset& data, const SplitSpec& spec,
                 std::uint64_t seed) {
  const SplitIndices idx = SplitRows(data.rows(), spec, seed);
  return {data.Subset(idx.orig_dev), data.Subset(idx.orig_val),
          data.Subset(idx.upd_dev), data.Subset(idx.upd_val),
          data.Subset(idx.eval)};
}

void CandidateSpec::Validate() const {
  if (n_resample < 0 || n_shuffle < 0 || n_resample + n_shuffle < 1) {
    throw Error(ErrorCode::kInvalidConfig,
                "need n_resample, n_shuffle >= 0 with at least one variant");
  }
  if (reg_grid.empty()) {
    throw Error(ErrorCode::kInvalidConfig, "empty L2 grid");
  }
  for (double a : alpha_grid) {
    if (!(a >= 0.0 && a <= 1.0)) {
      throw Error(ErrorCode::kInvalidConfig, "alpha outside [0,1]");
    }
  }
}

std::vector<std::size_t> BootstrapRows(const Dataset& data,
                                       std::uint64_t seed) {
  constexpr int kAttempts = 10;
  const std::size_t n = data.rows();
  if (n == 0) throw Error(ErrorCode::kEmptyInput, "cannot resample 0 rows");
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    std::mt19937_64 rng(DeriveSeed(seed, static_cast<std::uint64_t>(attempt)));
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    std::vector<std::size_t> rows(n);
    bool neg = false, pos = false;
    for (auto& r : rows) {
      r = pick(rng);
      neg |= data.labels()[r] == 0;
      pos |= data.labels()[r] == 1;
    }
    if (neg && pos) return rows;
  }
  throw Error(ErrorCode::kSingleClass,
              "bootstrap drew a single class in every attempt");
}

std::uint64_t VariantTrainSeed(std::uint64_t seed, int variant) {
  return DeriveSeed(seed, kTrainTag, static_cast<std::uint64_t>(variant));
}

std::uint64_t VariantBootstrapSeed(std::uint64_t seed, int variant) {
  return DeriveSeed(seed, kBootstrapTag, static_cast<std::uint64_t>(variant));
}

RiskModel TrainOriginal(const Dataset& dev, const Dataset& val,
                        std::span<const double> reg_grid,
                        const TrainConfig& base, std::uint64_t seed) {
  if (reg_grid.empty()) throw Error(ErrorCode::kInvalidConfig, "empty L2 grid");
  RequireBothClasses(dev, "original dev set");
  RequireBothClasses(val, "original val set");
  std::optional<RiskModel> best;
  double best_auroc = -1.0;
  for (std::size_t g = 0; g < reg_grid.size(); ++g) {
    const TrainConfig cfg = WithOverrides(
        base, reg_grid[g], 1.0, DeriveSeed(seed, kOriginalTag, g));
    RiskModel model = Train(dev, val, nullptr, cfg);
    const double auroc = Auroc(Predict(model, val), val.labels());
    const bool better =
        auroc > best_auroc ||
        (auroc == best_auroc && model.reg_l2 < best->reg_l2);
    if (better) {
      best_auroc = auroc;
      best = std::move(model);
    }
  }
  return *best;
}

std::vector<RiskModel> GenerateBceCandidates(const Dataset& dev,
                                             const Dataset& val,
                                             const CandidateSpec& spec,
                                             const TrainConfig& base,
                                             std::uint64_t seed) {
  spec.Validate();
  const int variants = spec.n_resample + spec.n_shuffle;
  std::vector<RiskModel> out(spec.bce_count());
  for (int v = 0; v < variants; ++v) {
    Dataset resampled;
    if (v < spec.n_resample) {
      resampled = dev.Subset(BootstrapRows(dev, VariantBootstrapSeed(seed, v)));
    }
    const Dataset& data = v < spec.n_resample ? resampled : dev;
    for (std::size_t g = 0; g < spec.reg_grid.size(); ++g) {
      const TrainConfig cfg = WithOverrides(base, spec.reg_grid[g], 1.0,
                                            VariantTrainSeed(seed, v));
      out[g * static_cast<std::size_t>(variants) + static_cast<std::size_t>(v)] =
          Train(data, val, nullptr, cfg);
    }
  }
  return out;
}

std::vector<std::vector<RiskModel>> GenerateRbcCandidates(
    const Dataset& dev, const Dataset& val, const RiskModel& original,
    const CandidateSpec& spec, const TrainConfig& base, std::uint64_t seed) {
  spec.Validate();
  if (original.dim() != dev.cols()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "original model dimension differs from the updated dev set");
  }
  const std::uint64_t train_seed = VariantTrainSeed(seed, spec.n_resample);
  std::vector<std::vector<RiskModel>> out;
  for (double alpha : spec.alpha_grid) {
    std::vector<RiskModel> slice;
    for (double reg : spec.reg_grid) {
      slice.push_back(
          Train(dev, val, &original, WithOverrides(base, reg, alpha, train_seed)));
    }
    out.push_back(std::move(slice));
  }
  return out;
}

double SelectionScore(const CandidateScore& c, double beta) {
  return beta * c.auroc + (1.0 - beta) * c.rbc;
}

std::size_t SelectIndex(std::span<const CandidateScore> scores, double beta) {
  if (scores.empty()) {
    throw Error(ErrorCode::kEmptyCandidates, "no candidates to select from");
  }
  std::size_t best = 0;
  for (std::size_t i = 1; i < scores.size(); ++i) {
    if (SelectionScore(scores[i], beta) > SelectionScore(scores[best], beta)) {
      best = i;
    }
  }
  return best;
}

CandidateScore ScoreCandidate(std::span<const double> original_scores,
                              std::span<const double> candidate_scores,
                              std::span<const int> labels) {
  const PopTable pop =
      ComputePopTable(original_scores, candidate_scores, labels);
  return {pop.auroc_u, RbcFromPop(pop)};
}

RiskModel Select(std::span<const RiskModel> candidates,
                 const RiskModel& original, const Dataset& val, double beta) {
  if (candidates.empty()) {
    throw Error(ErrorCode::kEmptyCandidates, "no candidates to select from");
  }
  const Scores original_scores = Predict(original, val);
  std::vector<CandidateScore> scores;
  scores.reserve(candidates.size());
  for (const RiskModel& c : candidates) {
    scores.push_back(
        ScoreCandidate(original_scores, Predict(c, val), val.labels()));
  }
  return candidates[SelectIndex(scores, beta)];
}

void ExperimentConfig::Validate(std::size_t n) const {
  split.Validate(n);
  candidates.Validate();
  train.Validate();
  if (beta_grid.empty() || candidates.alpha_grid.empty()) {
    throw Error(ErrorCode::kInvalidConfig, "empty alpha or beta grid");
  }
  for (double b : beta_grid) {
    if (!(b >= 0.0 && b <= 1.0)) {
      throw Error(ErrorCode::kInvalidConfig, "beta outside [0,1]");
    }
  }
}

std::size_t ReplicationResult::BoundViolations() const {
  std::size_t violations = 0;
  auto check = [&](const CandidateEval& e) {
    if (e.rbc_lower && e.rbc < *e.rbc_lower - 1e-12) ++violations;
  };
  for (const auto& e : bce) check(e);
  for (const auto& slice : rbc) {
    for (const auto& e : slice) check(e);
  }
  return violations;
}

Partitions ReplicationPartitions(const Dataset& data,
                                 const ExperimentConfig& cfg,
                                 std::uint64_t seed) {
  Partitions parts = Split(data, cfg.split, DeriveSeed(seed, kSplitTag));
  if (cfg.shift != 0.0) {
    ApplyShift(parts.upd_dev, cfg.shift_first_col, cfg.shift);
    ApplyShift(parts.upd_val, cfg.shift_first_col, cfg.shift);
    ApplyShift(parts.eval, cfg.shift_first_col, cfg.shift);
  }
  return parts;
}

ReplicationResult RunReplication(const Dataset& data,
                                 const ExperimentConfig& cfg,
                                 std::uint64_t seed) {
  cfg.Validate(data.rows());
  const Partitions parts = ReplicationPartitions(data, cfg, seed);
  RequireBothClasses(parts.upd_val, "updated val set");
  RequireBothClasses(parts.eval, "evaluation set");

  ReplicationResult result;
  result.seed = seed;
  result.original =
      TrainOriginal(parts.orig_dev, parts.orig_val, cfg.candidates.reg_grid,
                    cfg.train, DeriveSeed(seed, kOriginalTag));
  const std::uint64_t candidate_seed = DeriveSeed(seed, kCandidateTag);
  result.bce_models = GenerateBceCandidates(parts.upd_dev, parts.upd_val,
                                            cfg.candidates, cfg.train,
                                            candidate_seed);
  const auto rbc_models =
      GenerateRbcCandidates(parts.upd_dev, parts.upd_val, result.original,
                            cfg.candidates, cfg.train, candidate_seed);

  const Scores original_val = Predict(result.original, parts.upd_val);
  const Scores original_eval = Predict(result.original, parts.eval);
  result.original_auroc = Auroc(original_eval, parts.eval.labels());

  for (const RiskModel& m : result.bce_models) {
    result.bce.push_back(Evaluate(original_val, original_eval, m, parts, cfg));
  }
  result.alphas = cfg.candidates.alpha_grid;
  for (const auto& slice : rbc_models) {
    std::vector<CandidateEval> evals;
    for (const RiskModel& m : slice) {
      evals.push_back(Evaluate(original_val, original_eval, m, parts, cfg));
    }
    result.rbc.push_back(std::move(evals));
  }

  auto val_scores = [](std::span<const CandidateEval> evals) {
    std::vector<CandidateScore> out;
    for (const auto& e : evals) out.push_back({e.val_auroc, e.val_rbc});
    return out;
  };
  const auto bce_val = val_scores(result.bce);
  for (std::size_t a = 0; a < result.alphas.size(); ++a) {
    const auto rbc_val = val_scores(result.rbc[a]);
    for (double beta : cfg.beta_grid) {
      SelectionOutcome s;
      s.alpha = result.alphas[a];
      s.beta = beta;
      s.rbc_index = SelectIndex(rbc_val, beta);
      s.bce_index = SelectIndex(bce_val, beta);
      const CandidateEval& r = result.rbc[a][s.rbc_index];
      const CandidateEval& b = result.bce[s.bce_index];
      s.delta_rbc = r.rbc - b.rbc;
      s.delta_auroc = r.auroc - b.auroc;
      result.selections.push_back(s);
    }
  }
  return result;
}

std::uint64_t ReplicationSeed(std::uint64_t base_seed, std::size_t r) {
  return DeriveSeed(base_seed, kReplicationTag, r);
}

std::vector<ReplicationResult> RunExperiment(const Dataset& data,
                                             const ExperimentConfig& cfg,
                                             std::size_t replications,
                                             std::uint64_t base_seed,
                                             std::size_t jobs) {
  cfg.Validate(data.rows());
  std::vector<ReplicationResult> results(replications);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  auto worker = [&] {
    for (std::size_t r = next++; r < replications; r = next++) {
      try {
        results[r] = RunReplication(data, cfg, ReplicationSeed(base_seed, r));
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mu);
        if (!failure) failure = std::current_exception();
        next = replications;
      }
    }
  };
  const std::size_t threads = std::clamp<std::size_t>(jobs, 1, std::max<std::size_t>(replications, 1));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);
  return results;
}

double EmpiricalQuantile(std::vector<double> values, double q) {
  if (values.empty()) throw Error(ErrorCode::kEmptyInput, "no values");
  std::sort(values.begin(), values.end());
  const double h = q * static_cast<double>(values.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(h));
  const std::size_t hi = std::min(lo + 1, values.size() - 1);
  return values[lo] + (h - static_cast<double>(lo)) * (values[hi] - values[lo]);
}

bool IsImprovement(double drbc_lo, double dauroc_lo, double dauroc_hi) {
  return drbc_lo > 0.0 && dauroc_lo <= 0.0 && 0.0 <= dauroc_hi;
}

ExperimentSummary Aggregate(std::span<const ReplicationResult> results) {
  if (results.size() < 2) {
    throw Error(ErrorCode::kTooFewReplications,
                "confidence intervals need at least 2 replications");
  }
  const std::size_t cells = results.front().selections.size();
  for (const auto& r : results) {
    if (r.selections.size() != cells) {
      throw Error(ErrorCode::kSchemaError,
                  "replications disagree on the alpha/beta grid");
    }
  }
  ExperimentSummary summary;
  summary.replications = results.size();
  for (std::size_t c = 0; c < cells; ++c) {
    std::vector<double> drbc, dauroc;
    for (const auto& r : results) {
      drbc.push_back(r.selections[c].delta_rbc);
      dauroc.push_back(r.selections[c].delta_auroc);
    }
    SummaryRow row;
    row.alpha = results.front().selections[c].alpha;
    row.beta = results.front().selections[c].beta;
    const auto n = static_cast<double>(results.size());
    row.mean_drbc = std::accumulate(drbc.begin(), drbc.end(), 0.0) / n;
    row.mean_dauroc = std::accumulate(dauroc.begin(), dauroc.end(), 0.0) / n;
    row.drbc_lo = EmpiricalQuantile(drbc, 0.025);
    row.drbc_hi = EmpiricalQuantile(drbc, 0.975);
    row.dauroc_lo = EmpiricalQuantile(dauroc, 0.025);
    row.dauroc_hi = EmpiricalQuantile(dauroc, 0.975);
    row.improvement = IsImprovement(row.drbc_lo, row.dauroc_lo, row.dauroc_hi);
    summary.rows.push_back(row);
  }
  return summary;
}

std::size_t Histogram::ModeBin() const {
  return static_cast<std::size_t>(
      std::max_element(mass.begin(), mass.end()) - mass.begin());
}

double Histogram::MassNearMode(double radius) const {
  const double centre = (static_cast<double>(ModeBin()) + 0.5) * bin;
  double total = 0.0;
  for (std::size_t i = 0; i < mass.size(); ++i) {
    const double c = (static_cast<double>(i) + 0.5) * bin;
    if (std::abs(c - centre) <= radius + 1e-9) total += mass[i];
  }
  return total;
}

Histogram NormalizedHistogram(std::span<const double> values, double bin) {
  if (!(bin > 0.0 && bin <= 1.0)) {
    throw Error(ErrorCode::kInvalidConfig, "bin width must lie in (0,1]");
  }
  if (values.empty()) throw Error(ErrorCode::kEmptyInput, "no values");
  Histogram h;
  h.bin = bin;
  h.mass.assign(BinCount(bin), 0.0);
  const double weight = 1.0 / static_cast<double>(values.size());
  for (double v : values) {
    const double clamped = std::clamp(v, 0.0, 1.0);
    const auto idx = std::min(
        h.mass.size() - 1,
        static_cast<std::size_t>(std::floor(clamped / bin + 1e-9)));
    h.mass[idx] += weight;
  }
  return h;
}

Histogram PhiPpHistogram(std::span<const std::vector<double>> per_replication,
                         double bin) {
  if (per_replication.empty()) {
    throw Error(ErrorCode::kEmptyInput, "no replications");
  }
  Histogram mean;
  for (const auto& values : per_replication) {
    const Histogram h = NormalizedHistogram(values, bin);
    if (mean.mass.empty()) {
      mean = h;
    } else {
      for (std::size_t i = 0; i < h.mass.size(); ++i) mean.mass[i] += h.mass[i];
    }
  }
  for (double& m : mean.mass) m /= static_cast<double>(per_replication.size());
  return mean;
}

std::vector<double> DefaultBtcTaus() {
  std::vector<double> taus = Grid(0.0, 0.1, 0.01);
  for (double t : Grid(0.15, 0.95, 0.05)) taus.push_back(t);
  return taus;
}

BtcGrid BtcThresholdSweep(const RiskModel& original,
                          std::span<const RiskModel> pool, const Dataset& val,
                          const Dataset& eval, std::span<const double> tau_o,
                          std::span<const double> tau_u) {
  if (pool.empty()) {
    throw Error(ErrorCode::kEmptyCandidates, "empty updated-model pool");
  }
  if (tau_o.empty() || tau_u.empty()) {
    throw Error(ErrorCode::kEmptyInput, "empty threshold grid");
  }
  const Scores original_val = Predict(original, val);
  const Scores original_eval = Predict(original, eval);
  std::vector<Scores> pool_val, pool_eval;
  for (const RiskModel& m : pool) {
    pool_val.push_back(Predict(m, val));
    pool_eval.push_back(Predict(m, eval));
  }

  BtcGrid grid;
  grid.tau_o.assign(tau_o.begin(), tau_o.end());
  grid.tau_u.assign(tau_u.begin(), tau_u.end());
  for (double to : tau_o) {
    std::vector<BtcCell> row;
    const double accuracy_o = Accuracy(original_eval, eval.labels(), to);
    for (double tu : tau_u) {
      BtcCell cell;
      cell.accuracy_o = accuracy_o;
      try {
        double best = -1.0;
        for (std::size_t k = 0; k < pool.size(); ++k) {
          const double b = Btc(original_val, pool_val[k], val.labels(), to, tu);
          if (b > best) {
            best = b;
            cell.model_index = k;
          }
        }
        cell.btc = Btc(original_eval, pool_eval[cell.model_index],
                       eval.labels(), to, tu);
      } catch (const Error& err) {
        if (err.code() != ErrorCode::kOriginalAllWrong) throw;
        cell.degenerate = true;
      }
      cell.accuracy_u =
          Accuracy(pool_eval[cell.model_index], eval.labels(), tu);
      row.push_back(cell);
    }
    grid.cells.push_back(std::move(row));
  }
  return grid;
}

BtcGrid RunBtcSweep(const Dataset& data, const ExperimentConfig& cfg,
                    std::uint64_t seed, std::span<const double> tau_o,
                    std::span<const double> tau_u) {
  cfg.Validate(data.rows());
  const Partitions parts = ReplicationPartitions(data, cfg, seed);
  const RiskModel original =
      TrainOriginal(parts.orig_dev, parts.orig_val, cfg.candidates.reg_grid,
                    cfg.train, DeriveSeed(seed, kOriginalTag));
  const auto pool =
      GenerateBceCandidates(parts.upd_dev, parts.upd_val, cfg.candidates,
                            cfg.train, DeriveSeed(seed, kCandidateTag));
  return BtcThresholdSweep(original, pool, parts.upd_val, parts.eval, tau_o,
                           tau_u);
}

BtcGrid MeanBtcGrid(std::span<const BtcGrid> grids) {
  if (grids.empty()) throw Error(ErrorCode::kEmptyInput, "no grids");
  BtcGrid mean = grids.front();
  for (std::size_t i = 0; i < mean.cells.size(); ++i) {
    for (std::size_t j = 0; j < mean.cells[i].size(); ++j) {
      double btc = 0.0, acc_o = 0.0, acc_u = 0.0;
      std::size_t live = 0;
      for (const BtcGrid& g : grids) {
        const BtcCell& c = g.cells.at(i).at(j);
        acc_o += c.accuracy_o;
        acc_u += c.accuracy_u;
        if (c.degenerate) continue;
        btc += c.btc;
        ++live;
      }
      BtcCell& out = mean.cells[i][j];
      const auto n = static_cast<double>(grids.size());
      out.accuracy_o = acc_o / n;
      out.accuracy_u = acc_u / n;
      out.degenerate = live == 0;
      out.btc = live == 0 ? 0.0 : btc / static_cast<double>(live);
    }
  }
  return mean;
}

}  // namespace rankcompat
