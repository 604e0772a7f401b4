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

// The model-update experiment.
//
// One replication:
//   1. split the data into original dev/val, updated dev/val and evaluation;
//   2. train the original model (alpha = 1) over the L2 grid, keep the best
//      validation AUROC;
//   3. train the "BCE" pool: (n_resample bootstraps + n_shuffle reorderings)
//      of the updated dev set, each at every L2 strength;
//   4. train the "RBC" pool: for every alpha, one model per L2 strength
//      against the original model's scores;
//   5. for every (alpha, beta) pick the best RBC model and the best BCE model
//      by beta * AUROC + (1 - beta) * RBC on updated val, and compare them on
//      the evaluation set.

#ifndef RANKCOMPAT_PIPELINE_H_
#define RANKCOMPAT_PIPELINE_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "rankcompat/dataset.h"
#include "rankcompat/metrics.h"
#include "rankcompat/model.h"
#include "rankcompat/trainer.h"

namespace rankcompat {

// Counter-based seed mixing; equal inputs give equal seeds on every run and
// independent of scheduling.
std::uint64_t DeriveSeed(std::uint64_t base, std::uint64_t a,
                         std::uint64_t b = 0);

// Evenly spaced grid start, start+step, ..., end (end included within 1e-9).
std::vector<double> Grid(double start, double end, double step);

struct SplitSpec {
  std::size_t n_original = 1000;
  std::size_t n_updated = 5000;
  double dev_fraction = 0.5;

  // Throws SpecTooLarge when the two model partitions leave no evaluation
  // rows, InvalidConfig for a bad fraction.
  void Validate(std::size_t n) const;
};

struct SplitIndices {
  std::vector<std::size_t> orig_dev, orig_val, upd_dev, upd_val, eval;
};

struct Partitions {
  Dataset orig_dev, orig_val, upd_dev, upd_val, eval;
};

SplitIndices SplitRows(std::size_t n, const SplitSpec& spec,
                       std::uint64_t seed);
Partitions Split(const Dataset& data, const SplitSpec& spec,
                 std::uint64_t seed);

struct CandidateSpec {
  int n_resample = 45;
  int n_shuffle = 5;
  std::vector<double> reg_grid{0.1, 0.01, 0.001};
  std::vector<double> alpha_grid = Grid(0.0, 1.0, 0.1);

  void Validate() const;
  std::size_t bce_count() const {
    return static_cast<std::size_t>(n_resample + n_shuffle) * reg_grid.size();
  }
};

// Rows drawn uniformly with replacement, redrawn (up to 10 attempts) until
// both classes are present. Throws SingleClass after the last attempt.
std::vector<std::size_t> BootstrapRows(const Dataset& data,
                                       std::uint64_t seed);

// Seeds used by candidate generation, exposed so single candidates can be
// reproduced with a direct Train call.
std::uint64_t VariantTrainSeed(std::uint64_t seed, int variant);
std::uint64_t VariantBootstrapSeed(std::uint64_t seed, int variant);

// `base` supplies the optimizer settings and sigmoid sharpness; reg_l2, alpha
// and seed are overridden per model.
RiskModel TrainOriginal(const Dataset& dev, const Dataset& val,
                        std::span<const double> reg_grid,
                        const TrainConfig& base, std::uint64_t seed);

// Ordered reg-major: index = reg_index * (n_resample + n_shuffle) + variant,
// with variants [0, n_resample) bootstrapped and the rest reshuffled.
std::vector<RiskModel> GenerateBceCandidates(const Dataset& dev,
                                             const Dataset& val,
                                             const CandidateSpec& spec,
                                             const TrainConfig& base,
                                             std::uint64_t seed);

// One slice per alpha_grid entry, |reg_grid| models each, trained on the full
// updated dev set with the seed of the first reshuffled BCE variant.
std::vector<std::vector<RiskModel>> GenerateRbcCandidates(
    const Dataset& dev, const Dataset& val, const RiskModel& original,
    const CandidateSpec& spec, const TrainConfig& base, std::uint64_t seed);

struct CandidateScore {
  double auroc = 0.0;
  double rbc = 0.0;
};

double SelectionScore(const CandidateScore& c, double beta);

// Index of the first candidate maximizing SelectionScore.
std::size_t SelectIndex(std::span<const CandidateScore> scores, double beta);

// Scores each candidate on `val` against `original` and returns the winner.
RiskModel Select(std::span<const RiskModel> candidates,
                 const RiskModel& original, const Dataset& val, double beta);

CandidateScore ScoreCandidate(std::span<const double> original_scores,
                              std::span<const double> candidate_scores,
                              std::span<const int> labels);

struct ExperimentConfig {
  SplitSpec split;
  CandidateSpec candidates;
  std::vector<double> beta_grid = Grid(0.0, 1.0, 0.1);
  TrainConfig train;
  double eval_tau_o = 0.5;
  double eval_tau_u = 0.5;
  // Class-conditional shift on columns [shift_first_col, d) of the updated
  // and evaluation partitions; 0 disables it.
  double shift = 0.0;
  std::size_t shift_first_col = 0;

  void Validate(std::size_t n) const;
};

// Held-out and validation numbers for one candidate against the original.
struct CandidateEval {
  double val_auroc = 0.0;
  double val_rbc = 0.0;
  double auroc = 0.0;
  double rbc = 0.0;
  double phi_pp = 0.0;
  std::optional<double> btc;        // empty when the original is all wrong
  std::optional<double> rbc_lower;  // empty outside the bound's regime
};

struct SelectionOutcome {
  double alpha = 0.0;
  double beta = 0.0;
  std::size_t rbc_index = 0;  // within the alpha slice
  std::size_t bce_index = 0;
  double delta_rbc = 0.0;
  double delta_auroc = 0.0;
};

struct ReplicationResult {
  std::uint64_t seed = 0;
  double original_auroc = 0.0;  // on the evaluation set
  RiskModel original;
  std::vector<RiskModel> bce_models;
  std::vector<CandidateEval> bce;
  std::vector<double> alphas;
  std::vector<std::vector<CandidateEval>> rbc;  // one slice per alpha
  std::vector<SelectionOutcome> selections;     // alpha-major, beta-minor

  // Pairs whose RBC falls below the analytic lower bound.
  std::size_t BoundViolations() const;
};

// Partitions of one replication, with the configured shift applied.
Partitions ReplicationPartitions(const Dataset& data,
                                 const ExperimentConfig& cfg,
                                 std::uint64_t seed);

ReplicationResult RunReplication(const Dataset& data,
                                 const ExperimentConfig& cfg,
                                 std::uint64_t seed);

std::uint64_t ReplicationSeed(std::uint64_t base_seed, std::size_t r);

// Replications run on `jobs` threads; the output does not depend on `jobs`.
std::vector<ReplicationResult> RunExperiment(const Dataset& data,
                                             const ExperimentConfig& cfg,
                                             std::size_t replications,
                                             std::uint64_t base_seed,
                                             std::size_t jobs);

struct SummaryRow {
  double alpha = 0.0;
  double beta = 0.0;
  double mean_drbc = 0.0;
  double drbc_lo = 0.0;
  double drbc_hi = 0.0;
  double mean_dauroc = 0.0;
  double dauroc_lo = 0.0;
  double dauroc_hi = 0.0;
  bool improvement = false;
};

struct ExperimentSummary {
  std::size_t replications = 0;
  std::vector<SummaryRow> rows;
};

// Linear-interpolation quantile of the sorted sample (q in [0,1]).
double EmpiricalQuantile(std::vector<double> values, double q);

// True when the compatibility gain is significant while the AUROC change is
// not: drbc_lo > 0 and dauroc_lo <= 0 <= dauroc_hi.
bool IsImprovement(double drbc_lo, double dauroc_lo, double dauroc_hi);

ExperimentSummary Aggregate(std::span<const ReplicationResult> results);

struct Histogram {
  double bin = 0.0;
  std::vector<double> mass;  // bin i covers [i*bin, (i+1)*bin); last closed

  std::size_t ModeBin() const;
  // Mass in bins whose centres lie within `radius` of the mode's centre.
  double MassNearMode(double radius) const;
};

Histogram NormalizedHistogram(std::span<const double> values, double bin);

// Bin-wise mean of per-replication normalized histograms.
Histogram PhiPpHistogram(std::span<const std::vector<double>> per_replication,
                         double bin);

struct BtcCell {
  bool degenerate = false;  // a BTC denominator was empty
  std::size_t model_index = 0;
  double btc = 0.0;
  double accuracy_o = 0.0;
  double accuracy_u = 0.0;
};

struct BtcGrid {
  std::vector<double> tau_o;
  std::vector<double> tau_u;
  std::vector<std::vector<BtcCell>> cells;  // [tau_o index][tau_u index]
};

std::vector<double> DefaultBtcTaus();

// For every threshold pair, picks the pool model with the highest validation
// BTC and reports its evaluation BTC and both evaluation accuracies.
BtcGrid BtcThresholdSweep(const RiskModel& original,
                          std::span<const RiskModel> pool, const Dataset& val,
                          const Dataset& eval, std::span<const double> tau_o,
                          std::span<const double> tau_u);

// Threshold sweep for one replication: same partitions, original model and
// BCE pool as RunReplication with the same seed.
BtcGrid RunBtcSweep(const Dataset& data, const ExperimentConfig& cfg,
                    std::uint64_t seed, std::span<const double> tau_o,
                    std::span<const double> tau_u);

// Cell-wise mean over replications of the non-degenerate cells; a cell is
// degenerate only when it is degenerate in every grid. model_index is taken
// from the first grid.
BtcGrid MeanBtcGrid(std::span<const BtcGrid> grids);

}  // namespace rankcompat

#endif  // RANKCOMPAT_PIPELINE_H_
