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

#include "rankcompat/cli.h"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <memory>
#include <optional>

#include "CLI11.hpp"
#include "json.hpp"
#include "rankcompat/combinatorics.h"
#include "rankcompat/data_io.h"
#include "rankcompat/metrics.h"
#include "rankcompat/pipeline.h"
#include "rankcompat/status.h"
#include "rankcompat/svg.h"
#include "rankcompat/synth.h"
#include "rankcompat/trainer.h"

namespace rankcompat {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

// Everything a subcommand may read. Defaults, then RANKCOMPAT_SEED, then the
// --config file, then explicit flags.
struct Settings {
  std::uint64_t seed = 0;
  SynthConfig synth;
  SplitSpec split;
  CandidateSpec candidates;
  TrainConfig train;
  std::vector<double> betas = Grid(0.0, 1.0, 0.1);
  std::size_t replications = 40;
  std::size_t jobs = 1;
  double tau_o = 0.5;
  double tau_u = 0.5;
  std::vector<double> btc_taus_o = DefaultBtcTaus();
  std::vector<double> btc_taus_u = DefaultBtcTaus();
  std::int64_t m = 400;
  double auroc_o = 0.65;
  std::vector<double> auroc_u{0.65, 0.75, 0.85, 0.95};
};

json ToJson(const Settings& s) {
  return {
      {"seed", s.seed},
      {"synth",
       {{"n", s.synth.n},
        {"d", s.synth.d},
        {"prevalence", s.synth.prevalence},
        {"class_separation", s.synth.class_separation},
        {"noise_features", s.synth.noise_features},
        {"shift", s.synth.shift}}},
      {"split",
       {{"n_original", s.split.n_original},
        {"n_updated", s.split.n_updated},
        {"dev_fraction", s.split.dev_fraction}}},
      {"candidates",
       {{"n_resample", s.candidates.n_resample},
        {"n_shuffle", s.candidates.n_shuffle},
        {"reg_grid", s.candidates.reg_grid},
        {"alpha_grid", s.candidates.alpha_grid}}},
      {"train",
       {{"s", s.train.surrogate.s},
        {"alpha", s.train.surrogate.alpha},
        {"reg_l2", s.train.reg_l2},
        {"learning_rate", s.train.learning_rate},
        {"batch_size", s.train.batch_size},
        {"max_epochs", s.train.max_epochs},
        {"patience", s.train.patience}}},
      {"experiment",
       {{"beta_grid", s.betas},
        {"replications", s.replications},
        {"jobs", s.jobs},
        {"tau_o", s.tau_o},
        {"tau_u", s.tau_u}}},
      {"btc_sweep", {{"tau_o", s.btc_taus_o}, {"tau_u", s.btc_taus_u}}},
      {"combinatorics",
       {{"m", s.m}, {"auroc_o", s.auroc_o}, {"auroc_u", s.auroc_u}}},
  };
}

template <typename T>
void Overlay(const json& j, const char* section, const char* key, T& target) {
  const json* node = &j;
  if (section != nullptr) {
    if (!j.contains(section)) return;
    node = &j.at(section);
  }
  if (!node->is_object() || !node->contains(key)) return;
  try {
    target = node->at(key).get<T>();
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kSchemaError,
                std::string("config ") + (section ? section : "") + "." + key +
                    ": " + e.what());
  }
}

void OverlayConfigFile(const fs::path& path, Settings& s) {
  json j;
  try {
    j = json::parse(ReadText(path));
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kParseError, path.string() + ": " + e.what());
  }
  if (!j.is_object()) {
    throw Error(ErrorCode::kSchemaError, "config file must hold an object");
  }
  Overlay(j, nullptr, "seed", s.seed);
  Overlay(j, "synth", "n", s.synth.n);
  Overlay(j, "synth", "d", s.synth.d);
  Overlay(j, "synth", "prevalence", s.synth.prevalence);
  Overlay(j, "synth", "class_separation", s.synth.class_separation);
  Overlay(j, "synth", "noise_features", s.synth.noise_features);
  Overlay(j, "synth", "shift", s.synth.shift);
  Overlay(j, "split", "n_original", s.split.n_original);
  Overlay(j, "split", "n_updated", s.split.n_updated);
  Overlay(j, "split", "dev_fraction", s.split.dev_fraction);
  Overlay(j, "candidates", "n_resample", s.candidates.n_resample);
  Overlay(j, "candidates", "n_shuffle", s.candidates.n_shuffle);
  Overlay(j, "candidates", "reg_grid", s.candidates.reg_grid);
  Overlay(j, "candidates", "alpha_grid", s.candidates.alpha_grid);
  Overlay(j, "train", "s", s.train.surrogate.s);
  Overlay(j, "train", "alpha", s.train.surrogate.alpha);
  Overlay(j, "train", "reg_l2", s.train.reg_l2);
  Overlay(j, "train", "learning_rate", s.train.learning_rate);
  Overlay(j, "train", "batch_size", s.train.batch_size);
  Overlay(j, "train", "max_epochs", s.train.max_epochs);
  Overlay(j, "train", "patience", s.train.patience);
  Overlay(j, "experiment", "beta_grid", s.betas);
  Overlay(j, "experiment", "replications", s.replications);
  Overlay(j, "experiment", "jobs", s.jobs);
  Overlay(j, "experiment", "tau_o", s.tau_o);
  Overlay(j, "experiment", "tau_u", s.tau_u);
  Overlay(j, "btc_sweep", "tau_o", s.btc_taus_o);
  Overlay(j, "btc_sweep", "tau_u", s.btc_taus_u);
  Overlay(j, "combinatorics", "m", s.m);
  Overlay(j, "combinatorics", "auroc_o", s.auroc_o);
  Overlay(j, "combinatorics", "auroc_u", s.auroc_u);
}

std::uint64_t ParseSeed(std::string_view text) {
  std::uint64_t v = 0;
  const auto r = std::from_chars(text.data(), text.data() + text.size(), v);
  if (r.ec != std::errc() || r.ptr != text.data() + text.size()) {
    throw Error(ErrorCode::kInvalidConfig,
                "RANKCOMPAT_SEED is not an unsigned integer: " +
                    std::string(text));
  }
  return v;
}

// Flags registered on a subcommand; each one overrides a Settings field only
// when given on the command line.
class FlagSet {
 public:
  explicit FlagSet(CLI::App* app) : app_(app) {}

  template <typename Access>
  void Add(const std::string& name, const std::string& help, Access access) {
    using T = std::remove_cvref_t<decltype(access(std::declval<Settings&>()))>;
    Settings defaults;
    auto value = std::make_shared<T>(access(defaults));
    CLI::Option* opt = app_->add_option(name, *value, help)->capture_default_str();
    appliers_.push_back([opt, value, access](Settings& s) {
      if (opt->count() > 0) access(s) = *value;
    });
  }

  // Grid-valued flag using the start..end[:step] grammar.
  template <typename Access>
  void AddGrid(const std::string& name, const std::string& help,
               Access access) {
    auto text = std::make_shared<std::string>();
    CLI::Option* opt =
        app_->add_option(name, *text, help + " (start..end[:step] or a,b,c)");
    appliers_.push_back([opt, text, access](Settings& s) {
      if (opt->count() > 0) access(s) = ParseGridSpec(*text);
    });
  }

  void Apply(Settings& s) const {
    for (const auto& f : appliers_) f(s);
  }

 private:
  CLI::App* app_;
  std::vector<std::function<void(Settings&)>> appliers_;
};

void AddSeedFlags(FlagSet& f) {
  f.Add("--seed", "Base random seed (falls back to RANKCOMPAT_SEED)",
        [](Settings& s) -> auto& { return s.seed; });
}

void AddSynthFlags(FlagSet& f) {
  f.Add("--n", "Synthetic rows", [](Settings& s) -> auto& { return s.synth.n; });
  f.Add("--d", "Synthetic feature count",
        [](Settings& s) -> auto& { return s.synth.d; });
  f.Add("--prevalence", "Fraction of positive labels",
        [](Settings& s) -> auto& { return s.synth.prevalence; });
  f.Add("--separation", "Mean shift between class-conditional Gaussians",
        [](Settings& s) -> auto& { return s.synth.class_separation; });
  f.Add("--noise-features", "Label-independent columns (the last ones)",
        [](Settings& s) -> auto& { return s.synth.noise_features; });
  f.Add("--shift",
        "Class-conditional shift of the noise columns in updated/eval rows",
        [](Settings& s) -> auto& { return s.synth.shift; });
}

void AddSplitFlags(FlagSet& f) {
  f.Add("--n-original", "Rows for the original model (dev+val)",
        [](Settings& s) -> auto& { return s.split.n_original; });
  f.Add("--n-updated", "Rows for the updated model (dev+val)",
        [](Settings& s) -> auto& { return s.split.n_updated; });
  f.Add("--dev-fraction", "Fraction of each model partition used for dev",
        [](Settings& s) -> auto& { return s.split.dev_fraction; });
}

void AddTrainFlags(FlagSet& f, bool with_alpha_and_reg) {
  if (with_alpha_and_reg) {
    f.Add("--alpha", "Weight on binary cross-entropy",
          [](Settings& s) -> auto& { return s.train.surrogate.alpha; });
    f.Add("--reg", "L2 penalty strength",
          [](Settings& s) -> auto& { return s.train.reg_l2; });
  }
  f.Add("--sharpness", "Ranking sigmoid sharpness s",
        [](Settings& s) -> auto& { return s.train.surrogate.s; });
  f.Add("--lr", "SGD learning rate",
        [](Settings& s) -> auto& { return s.train.learning_rate; });
  f.Add("--batch-size", "SGD mini-batch size",
        [](Settings& s) -> auto& { return s.train.batch_size; });
  f.Add("--max-epochs", "Epoch budget",
        [](Settings& s) -> auto& { return s.train.max_epochs; });
  f.Add("--patience", "Early-stopping patience in epochs",
        [](Settings& s) -> auto& { return s.train.patience; });
}

void AddCandidateFlags(FlagSet& f, bool with_alphas) {
  f.Add("--n-resample", "Bootstrap variants in the BCE pool",
        [](Settings& s) -> auto& { return s.candidates.n_resample; });
  f.Add("--n-shuffle", "Reshuffled variants in the BCE pool",
        [](Settings& s) -> auto& { return s.candidates.n_shuffle; });
  f.AddGrid("--regs", "L2 strengths",
            [](Settings& s) -> auto& { return s.candidates.reg_grid; });
  if (with_alphas) {
    f.AddGrid("--alphas", "Training weights alpha for RBC models",
              [](Settings& s) -> auto& { return s.candidates.alpha_grid; });
  }
}

struct Command {
  CLI::App* app = nullptr;
  std::unique_ptr<FlagSet> flags;
  std::string config_path;
};

Command MakeCommand(CLI::App& root, const std::string& name,
                    const std::string& help) {
  Command c;
  c.app = root.add_subcommand(name, help);
  c.flags = std::make_unique<FlagSet>(c.app);
  c.app->add_option("--config", c.config_path,
                    "JSON config file; flags override its values");
  return c;
}

Settings Resolve(const Command& c, std::ostream& err) {
  Settings s;
  if (const char* env = std::getenv("RANKCOMPAT_SEED"); env && *env) {
    s.seed = ParseSeed(env);
  }
  if (!c.config_path.empty()) OverlayConfigFile(c.config_path, s);
  c.flags->Apply(s);
  err << "resolved config: " << ToJson(s).dump() << "\n";
  return s;
}

Dataset DataOrSynthetic(const std::string& path, const Settings& s) {
  if (!path.empty()) return LoadDataset(path);
  SynthConfig synth = s.synth;
  synth.seed = s.seed;
  return Generate(synth);
}

ExperimentConfig ExperimentFrom(const Settings& s, std::size_t cols) {
  ExperimentConfig cfg;
  cfg.split = s.split;
  cfg.candidates = s.candidates;
  cfg.beta_grid = s.betas;
  cfg.train = s.train;
  cfg.eval_tau_o = s.tau_o;
  cfg.eval_tau_u = s.tau_u;
  cfg.shift = s.synth.shift;
  cfg.shift_first_col =
      cols >= s.synth.noise_features ? cols - s.synth.noise_features : 0;
  return cfg;
}

std::string Label(double v) { return FormatDouble(v); }

// ---- subcommands ----------------------------------------------------------

void GenData(const Settings& s, const std::string& out_path,
             std::ostream& out) {
  SynthConfig cfg = s.synth;
  cfg.seed = s.seed;
  const Dataset data = Generate(cfg);
  SaveDataset(out_path, data);
  out << "wrote " << data.rows() << " rows x " << data.cols()
      << " features to " << out_path << "\n";
}

void SplitCommand(const Settings& s, const std::string& data_path,
                  const fs::path& out_dir, std::ostream& out) {
  const Dataset data = DataOrSynthetic(data_path, s);
  const Partitions p = Split(data, s.split, s.seed);
  fs::create_directories(out_dir);
  const std::pair<const char*, const Dataset*> files[] = {
      {"orig_dev.csv", &p.orig_dev}, {"orig_val.csv", &p.orig_val},
      {"upd_dev.csv", &p.upd_dev},   {"upd_val.csv", &p.upd_val},
      {"eval.csv", &p.eval}};
  for (const auto& [name, d] : files) {
    SaveDataset(out_dir / name, *d);
    out << name << " " << d->rows() << "\n";
  }
}

void TrainCommand(const Settings& s, const std::string& dev_path,
                  const std::string& val_path,
                  const std::string& original_path,
                  const std::string& out_path, std::ostream& out) {
  const Dataset dev = LoadDataset(dev_path);
  const Dataset val = LoadDataset(val_path);
  std::optional<RiskModel> original;
  if (!original_path.empty()) original = LoadModel(original_path);
  TrainConfig cfg = s.train;
  cfg.seed = s.seed;
  const TrainResult r =
      TrainWithHistory(dev, val, original ? &*original : nullptr, cfg);
  SaveModel(out_path, r.model);
  out << "epochs_run " << r.model.metadata.epochs_run << "\n"
      << "best_epoch " << r.best_epoch << "\n"
      << "val_objective " << FormatDouble(r.validation_objective.at(
                                 static_cast<std::size_t>(r.best_epoch - 1)))
      << "\n"
      << "val_auroc " << FormatDouble(Auroc(Predict(r.model, val), val.labels()))
      << "\n";
}

void EvaluateCommand(const Settings& s, const std::string& original_path,
                     const std::string& updated_path,
                     const std::string& data_path, std::ostream& out) {
  const RiskModel original = LoadModel(original_path);
  const RiskModel updated = LoadModel(updated_path);
  const Dataset data = LoadDataset(data_path);
  const Scores po = Predict(original, data);
  const Scores pu = Predict(updated, data);
  const PopTable pop = ComputePopTable(po, pu, data.labels());
  out << "rows " << data.rows() << "\n"
      << "auroc_original " << FormatDouble(pop.auroc_o) << "\n"
      << "auroc_updated " << FormatDouble(pop.auroc_u) << "\n"
      << "rbc " << FormatDouble(RbcFromPop(pop)) << "\n";
  try {
    out << "btc " << FormatDouble(Btc(po, pu, data.labels(), s.tau_o, s.tau_u))
        << "\n";
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kOriginalAllWrong) throw;
    out << "btc degenerate\n";
  }
  out << "accuracy_original " << FormatDouble(Accuracy(po, data.labels(), s.tau_o))
      << "\n"
      << "accuracy_updated " << FormatDouble(Accuracy(pu, data.labels(), s.tau_u))
      << "\n"
      << "pop m=" << pop.m << " m_pp=" << pop.m_pp << " m_pm=" << pop.m_pm
      << " m_mp=" << pop.m_mp << " m_mm=" << pop.m_mm << "\n"
      << "phi pp=" << FormatDouble(pop.phi_pp) << " pm=" << FormatDouble(pop.phi_pm)
      << " mp=" << FormatDouble(pop.phi_mp) << " mm=" << FormatDouble(pop.phi_mm)
      << "\n";
  if (pop.auroc_o > 0.5 && pop.auroc_o <= pop.auroc_u) {
    out << "rbc_lower " << FormatDouble(Bounds(pop.auroc_o, pop.auroc_u).rbc_lower)
        << "\n";
  } else {
    out << "rbc_lower out-of-regime\n";
  }
}

void UpdateExperiment(const Settings& s, const std::string& data_path,
                      const fs::path& out_dir, bool per_replication,
                      std::ostream& out) {
  const Dataset data = DataOrSynthetic(data_path, s);
  const ExperimentConfig cfg = ExperimentFrom(s, data.cols());
  const auto results =
      RunExperiment(data, cfg, s.replications, s.seed, s.jobs);
  const ExperimentSummary summary = Aggregate(results);

  fs::create_directories(out_dir);
  WriteReport(out_dir / "summary.csv", summary);
  WriteText(out_dir / "scatter.csv", ScatterToCsv(results));
  if (per_replication) {
    for (std::size_t r = 0; r < results.size(); ++r) {
      char name[32];
      std::snprintf(name, sizeof(name), "replication_%03zu.csv", r);
      WriteReport(out_dir / name, results[r]);
    }
  }

  std::vector<PlotSeries> series(1 + cfg.candidates.alpha_grid.size());
  series[0].name = "BCE models";
  for (std::size_t a = 0; a < cfg.candidates.alpha_grid.size(); ++a) {
    series[a + 1].name = "RBC models alpha=" + Label(cfg.candidates.alpha_grid[a]);
  }
  std::vector<std::vector<double>> phi_pp;
  for (const auto& r : results) {
    std::vector<double> phis;
    for (const auto& e : r.bce) {
      series[0].points.emplace_back(e.auroc, e.rbc);
      phis.push_back(e.phi_pp);
    }
    for (std::size_t a = 0; a < r.rbc.size(); ++a) {
      for (const auto& e : r.rbc[a]) {
        series[a + 1].points.emplace_back(e.auroc, e.rbc);
      }
    }
    phi_pp.push_back(std::move(phis));
  }
  WriteText(out_dir / "scatter.svg",
            ScatterSvg(series, {"Held-out AUROC vs RBC per candidate",
                                "AUROC (updated model)", "RBC"}));
  WriteText(out_dir / "phi_pp_histogram.csv",
            HistogramToCsv(PhiPpHistogram(phi_pp, 0.01)));

  std::size_t improved = 0, violations = 0;
  for (const auto& row : summary.rows) improved += row.improvement;
  for (const auto& r : results) violations += r.BoundViolations();
  out << "replications " << results.size() << "\n"
      << "alpha_beta_rows " << summary.rows.size() << "\n"
      << "improved_rows " << improved << "\n"
      << "bound_violations " << violations << "\n"
      << "wrote " << (out_dir / "summary.csv").string() << "\n";
}

void CombinatoricsCommand(const Settings& s, const fs::path& out_dir,
                          std::ostream& out) {
  const auto curves = NuCurves(s.auroc_o, s.auroc_u, s.m);
  fs::create_directories(out_dir);
  WriteText(out_dir / "nu_curves.csv", NuCurvesToCsv(curves));
  std::vector<PlotSeries> series;
  for (const NuCurve& c : curves) {
    PlotSeries ps;
    ps.name = "AUROC(updated)=" + Label(c.auroc_u);
    for (const NuPoint& p : c.points) {
      ps.points.emplace_back(p.rbc, p.log_count / std::log(10.0));
    }
    series.push_back(std::move(ps));
    out << "auroc_u " << Label(c.auroc_u) << " m_op " << c.counts.m_op
        << " m_up " << c.counts.m_up << " k_star " << c.k_star
        << " rbc_at_k_star "
        << FormatDouble(static_cast<double>(c.k_star) /
                        static_cast<double>(c.counts.m_op))
        << "\n";
  }
  WriteText(out_dir / "nu_curves.svg",
            LineSvg(series, {"Combinations yielding each RBC (AUROC(original)=" +
                                 Label(s.auroc_o) + ", m=" +
                                 std::to_string(s.m) + ")",
                             "RBC = k / m_op", "log10 count"}));
}

void BtcSweepCommand(const Settings& s, const std::string& data_path,
                     const fs::path& out_dir, std::ostream& out) {
  const Dataset data = DataOrSynthetic(data_path, s);
  const ExperimentConfig cfg = ExperimentFrom(s, data.cols());
  cfg.Validate(data.rows());
  std::vector<BtcGrid> grids;
  for (std::size_t r = 0; r < s.replications; ++r) {
    grids.push_back(RunBtcSweep(data, cfg, ReplicationSeed(s.seed, r),
                                s.btc_taus_o, s.btc_taus_u));
  }
  const BtcGrid mean = MeanBtcGrid(grids);
  fs::create_directories(out_dir);
  WriteText(out_dir / "btc_sweep.csv", BtcGridToCsv(mean));
  std::vector<std::vector<double>> values;
  std::size_t degenerate = 0;
  for (const auto& row : mean.cells) {
    std::vector<double> v;
    for (const auto& c : row) {
      v.push_back(c.degenerate ? std::nan("") : c.btc);
      degenerate += c.degenerate;
    }
    values.push_back(std::move(v));
  }
  WriteText(out_dir / "btc_sweep.svg",
            HeatmapSvg(mean.tau_o, mean.tau_u, values,
                       {"Max-achievable BTC over the BCE pool",
                        "tau (updated model)", "tau (original model)"}));
  out << "grid " << mean.tau_o.size() << "x" << mean.tau_u.size() << "\n"
      << "degenerate_cells " << degenerate << "\n"
      << "wrote " << (out_dir / "btc_sweep.csv").string() << "\n";
}

}  // namespace

std::vector<double> ParseGridSpec(std::string_view text) {
  auto number = [&](std::string_view t) {
    double v = 0.0;
    while (!t.empty() && t.front() == ' ') t.remove_prefix(1);
    while (!t.empty() && t.back() == ' ') t.remove_suffix(1);
    const auto r = std::from_chars(t.data(), t.data() + t.size(), v);
    if (t.empty() || r.ec != std::errc() || r.ptr != t.data() + t.size() ||
        !std::isfinite(v)) {
      throw Error(ErrorCode::kInvalidConfig,
                  "bad number \"" + std::string(t) + "\" in grid \"" +
                      std::string(text) + "\"");
    }
    return v;
  };
  if (const auto dots = text.find(".."); dots != std::string_view::npos) {
    const double start = number(text.substr(0, dots));
    std::string_view rest = text.substr(dots + 2);
    double step = 0.1;
    if (const auto colon = rest.find(':'); colon != std::string_view::npos) {
      step = number(rest.substr(colon + 1));
      rest = rest.substr(0, colon);
    }
    return Grid(start, number(rest), step);
  }
  std::vector<double> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = std::min(text.find(',', start), text.size());
    out.push_back(number(text.substr(start, comma - start)));
    start = comma + 1;
  }
  return out;
}

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Rank-based compatibility of risk-model updates"};
  app.name("rankcompat");
  app.require_subcommand(1);

  std::string out_path, data_path, dev_path, val_path, original_path,
      updated_path, out_dir = ".";
  bool per_replication = false;

  Command gen = MakeCommand(app, "gen-data", "Write a synthetic dataset CSV");
  AddSeedFlags(*gen.flags);
  AddSynthFlags(*gen.flags);
  gen.app->add_option("--out", out_path, "Output CSV")->required();

  Command split = MakeCommand(app, "split", "Write the five partition CSVs");
  AddSeedFlags(*split.flags);
  AddSynthFlags(*split.flags);
  AddSplitFlags(*split.flags);
  split.app->add_option("--data", data_path,
                        "Dataset CSV (synthetic data when omitted)");
  split.app->add_option("--out-dir", out_dir, "Output directory")
      ->capture_default_str();

  Command train = MakeCommand(app, "train", "Train one risk model");
  AddSeedFlags(*train.flags);
  AddTrainFlags(*train.flags, true);
  train.app->add_option("--dev", dev_path, "Development CSV")->required();
  train.app->add_option("--val", val_path, "Validation CSV")->required();
  train.app->add_option("--original", original_path,
                        "Original model JSON (required when alpha < 1)");
  train.app->add_option("--out", out_path, "Output model JSON")->required();

  Command evaluate = MakeCommand(
      app, "evaluate", "AUROC, RBC, BTC and POP table of a model-pair");
  evaluate.flags->Add("--tau-o", "Original model threshold",
                      [](Settings& s) -> auto& { return s.tau_o; });
  evaluate.flags->Add("--tau-u", "Updated model threshold",
                      [](Settings& s) -> auto& { return s.tau_u; });
  evaluate.app->add_option("--original", original_path, "Original model JSON")
      ->required();
  evaluate.app->add_option("--updated", updated_path, "Updated model JSON")
      ->required();
  evaluate.app->add_option("--data", data_path, "Evaluation CSV")->required();

  Command experiment = MakeCommand(
      app, "update-experiment",
      "Replicated BCE-vs-RBC update experiment with empirical CIs");
  AddSeedFlags(*experiment.flags);
  AddSynthFlags(*experiment.flags);
  AddSplitFlags(*experiment.flags);
  AddCandidateFlags(*experiment.flags, true);
  AddTrainFlags(*experiment.flags, false);
  experiment.flags->AddGrid("--betas", "Selection weights beta",
                            [](Settings& s) -> auto& { return s.betas; });
  experiment.flags->Add("--replications", "Number of replications",
                        [](Settings& s) -> auto& { return s.replications; });
  experiment.flags->Add("--jobs", "Worker threads (output is identical for any value)",
                        [](Settings& s) -> auto& { return s.jobs; });
  experiment.flags->Add("--tau-o", "Original threshold for reported BTC",
                        [](Settings& s) -> auto& { return s.tau_o; });
  experiment.flags->Add("--tau-u", "Updated threshold for reported BTC",
                        [](Settings& s) -> auto& { return s.tau_u; });
  experiment.app->add_option("--data", data_path,
                             "Dataset CSV (synthetic data when omitted)");
  experiment.app->add_option("--out-dir", out_dir, "Output directory")
      ->capture_default_str();
  experiment.app->add_flag("--per-replication", per_replication,
                           "Also write one selections CSV per replication");

  Command comb = MakeCommand(app, "combinatorics",
                             "Combination counts of shared correct pairs");
  comb.flags->Add("--m", "Total patient-pairs",
                  [](Settings& s) -> auto& { return s.m; });
  comb.flags->Add("--auroc-o", "Original model AUROC",
                  [](Settings& s) -> auto& { return s.auroc_o; });
  comb.flags->AddGrid("--auroc-u", "Updated model AUROCs, one curve each",
                      [](Settings& s) -> auto& { return s.auroc_u; });
  comb.app->add_option("--out-dir", out_dir, "Output directory")
      ->capture_default_str();

  Command sweep = MakeCommand(app, "btc-sweep",
                              "Max-achievable BTC over a threshold grid");
  AddSeedFlags(*sweep.flags);
  AddSynthFlags(*sweep.flags);
  AddSplitFlags(*sweep.flags);
  AddCandidateFlags(*sweep.flags, false);
  AddTrainFlags(*sweep.flags, false);
  sweep.flags->Add("--replications", "Number of replications to average",
                   [](Settings& s) -> auto& { return s.replications; });
  sweep.flags->AddGrid("--taus-o", "Original model thresholds",
                       [](Settings& s) -> auto& { return s.btc_taus_o; });
  sweep.flags->AddGrid("--taus-u", "Updated model thresholds",
                       [](Settings& s) -> auto& { return s.btc_taus_u; });
  sweep.app->add_option("--data", data_path,
                        "Dataset CSV (synthetic data when omitted)");
  sweep.app->add_option("--out-dir", out_dir, "Output directory")
      ->capture_default_str();

  std::vector<std::string> owned = args;
  owned.insert(owned.begin(), "rankcompat");
  std::vector<char*> argv;
  for (auto& a : owned) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    err << app.help();
    return kExitUsage;
  }

  try {
    if (gen.app->parsed()) {
      GenData(Resolve(gen, err), out_path, out);
    } else if (split.app->parsed()) {
      SplitCommand(Resolve(split, err), data_path, out_dir, out);
    } else if (train.app->parsed()) {
      TrainCommand(Resolve(train, err), dev_path, val_path, original_path,
                   out_path, out);
    } else if (evaluate.app->parsed()) {
      EvaluateCommand(Resolve(evaluate, err), original_path, updated_path,
                      data_path, out);
    } else if (experiment.app->parsed()) {
      UpdateExperiment(Resolve(experiment, err), data_path, out_dir,
                       per_replication, out);
    } else if (comb.app->parsed()) {
      CombinatoricsCommand(Resolve(comb, err), out_dir, out);
    } else if (sweep.app->parsed()) {
      BtcSweepCommand(Resolve(sweep, err), data_path, out_dir, out);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return IsNumericError(e.code()) ? kExitNumeric : kExitData;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitData;
  }
  return kExitOk;
}

}  // namespace rankcompat
