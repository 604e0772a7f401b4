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

#include "rankcompat/data_io.h"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <vector>

#include "rankcompat/status.h"

namespace rankcompat {
namespace {

[[noreturn]] void ParseFail(std::size_t line, std::size_t column,
                            const std::string& what) {
  throw Error(ErrorCode::kParseError, "line " + std::to_string(line) +
                                          ", column " + std::to_string(column) +
                                          ": " + what);
}

std::vector<std::string_view> SplitFields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
}

void RequireFinite(double v, const char* what) {
  if (!std::isfinite(v)) {
    throw Error(ErrorCode::kNonFiniteScore,
                std::string("refusing to save non-finite ") + what);
  }
}

template <typename T>
T Field(const nlohmann::json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw Error(ErrorCode::kSchemaError,
                std::string("missing field \"") + key + "\"");
  }
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kSchemaError,
                std::string("field \"") + key + "\": " + e.what());
  }
}

std::string Bool(bool b) { return b ? "true" : "false"; }

}  // namespace

std::string FormatDouble(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::string DatasetToCsv(const Dataset& data) {
  std::string out = "y";
  for (std::size_t c = 0; c < data.cols(); ++c) {
    out += ",f" + std::to_string(c);
  }
  out += '\n';
  for (std::size_t i = 0; i < data.rows(); ++i) {
    out += std::to_string(data.labels()[i]);
    for (double v : data.row(i)) {
      RequireFinite(v, "feature value");
      out += ',';
      out += FormatDouble(v);
    }
    out += '\n';
  }
  return out;
}

Dataset DatasetFromCsv(std::string_view text, LabelMode mode) {
  std::size_t line_no = 0;
  std::size_t cols = 0;
  bool have_header = false;
  std::vector<double> features;
  std::vector<int> labels;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    const auto fields = SplitFields(line);
    if (!have_header) {
      if (fields.front() != "y") ParseFail(line_no, 1, "header must start with y");
      for (std::size_t c = 1; c < fields.size(); ++c) {
        if (fields[c] != "f" + std::to_string(c - 1)) {
          ParseFail(line_no, c + 1,
                    "expected header f" + std::to_string(c - 1));
        }
      }
      cols = fields.size() - 1;
      have_header = true;
      continue;
    }
    if (fields.size() != cols + 1) {
      ParseFail(line_no, std::min(fields.size(), cols + 1) + 1,
                "expected " + std::to_string(cols + 1) + " fields, got " +
                    std::to_string(fields.size()));
    }
    int label = 0;
    const auto lf = fields[0];
    const auto lr = std::from_chars(lf.data(), lf.data() + lf.size(), label);
    if (lr.ec != std::errc() || lr.ptr != lf.data() + lf.size()) {
      ParseFail(line_no, 1, "label \"" + std::string(lf) + "\" is not an integer");
    }
    if (mode == LabelMode::kBinary && label != 0 && label != 1) {
      ParseFail(line_no, 1, "binary label expected, got " + std::string(lf));
    }
    if (label < 0) ParseFail(line_no, 1, "negative label");
    labels.push_back(label);
    for (std::size_t c = 1; c < fields.size(); ++c) {
      const auto f = fields[c];
      double v = 0.0;
      const auto r = std::from_chars(f.data(), f.data() + f.size(), v);
      if (r.ec != std::errc() || r.ptr != f.data() + f.size() ||
          !std::isfinite(v)) {
        ParseFail(line_no, c + 1,
                  "\"" + std::string(f) + "\" is not a finite number");
      }
      features.push_back(v);
    }
  }
  if (!have_header) {
    throw Error(ErrorCode::kParseError, "line 1, column 1: missing header");
  }
  return Dataset(cols, std::move(features), std::move(labels));
}

void WriteText(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw Error(ErrorCode::kIoError, "cannot open " + path.string());
  }
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw Error(ErrorCode::kIoError, "write failed: " + path.string());
}

std::string ReadText(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void SaveDataset(const std::filesystem::path& path, const Dataset& data) {
  WriteText(path, DatasetToCsv(data));
}

Dataset LoadDataset(const std::filesystem::path& path, LabelMode mode) {
  return DatasetFromCsv(ReadText(path), mode);
}

nlohmann::json ModelToJson(const RiskModel& model) {
  for (double w : model.weights) RequireFinite(w, "weight");
  RequireFinite(model.intercept, "intercept");
  RequireFinite(model.reg_l2, "reg_l2");
  RequireFinite(model.metadata.alpha, "alpha");
  return {
      {"weights", model.weights},
      {"intercept", model.intercept},
      {"reg_l2", model.reg_l2},
      {"metadata",
       {{"seed", model.metadata.seed},
        {"alpha", model.metadata.alpha},
        {"epochs_run", model.metadata.epochs_run}}},
  };
}

RiskModel ModelFromJson(const nlohmann::json& j) {
  RiskModel m;
  m.weights = Field<std::vector<double>>(j, "weights");
  m.intercept = Field<double>(j, "intercept");
  m.reg_l2 = Field<double>(j, "reg_l2");
  const auto meta = Field<nlohmann::json>(j, "metadata");
  m.metadata.seed = Field<std::uint64_t>(meta, "seed");
  m.metadata.alpha = Field<double>(meta, "alpha");
  m.metadata.epochs_run = Field<int>(meta, "epochs_run");
  return m;
}

void SaveModel(const std::filesystem::path& path, const RiskModel& model) {
  WriteText(path, ModelToJson(model).dump(2) + "\n");
}

RiskModel LoadModel(const std::filesystem::path& path) {
  const std::string text = ReadText(path);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::kParseError, path.string() + ": " + e.what());
  }
  return ModelFromJson(j);
}

std::string SummaryToCsv(const ExperimentSummary& summary) {
  std::string out =
      "alpha,beta,mean_drbc,drbc_lo,drbc_hi,mean_dauroc,dauroc_lo,dauroc_hi,"
      "improvement\n";
  for (const SummaryRow& r : summary.rows) {
    out += FormatDouble(r.alpha) + ',' + FormatDouble(r.beta) + ',' +
           FormatDouble(r.mean_drbc) + ',' + FormatDouble(r.drbc_lo) + ',' +
           FormatDouble(r.drbc_hi) + ',' + FormatDouble(r.mean_dauroc) + ',' +
           FormatDouble(r.dauroc_lo) + ',' + FormatDouble(r.dauroc_hi) + ',' +
           Bool(r.improvement) + '\n';
  }
  return out;
}

std::string ReplicationToCsv(const ReplicationResult& result) {
  std::string out =
      "alpha,beta,rbc_index,bce_index,rbc_model_auroc,rbc_model_rbc,"
      "bce_model_auroc,bce_model_rbc,delta_rbc,delta_auroc\n";
  for (std::size_t s = 0; s < result.selections.size(); ++s) {
    const SelectionOutcome& sel = result.selections[s];
    const CandidateEval& r = result.rbc.at(s / (result.selections.size() /
                                                result.alphas.size()))
                                 .at(sel.rbc_index);
    const CandidateEval& b = result.bce.at(sel.bce_index);
    out += FormatDouble(sel.alpha) + ',' + FormatDouble(sel.beta) + ',' +
           std::to_string(sel.rbc_index) + ',' +
           std::to_string(sel.bce_index) + ',' + FormatDouble(r.auroc) + ',' +
           FormatDouble(r.rbc) + ',' + FormatDouble(b.auroc) + ',' +
           FormatDouble(b.rbc) + ',' + FormatDouble(sel.delta_rbc) + ',' +
           FormatDouble(sel.delta_auroc) + '\n';
  }
  return out;
}

void WriteReport(const std::filesystem::path& path,
                 const ExperimentSummary& summary) {
  WriteText(path, SummaryToCsv(summary));
}

void WriteReport(const std::filesystem::path& path,
                 const ReplicationResult& result) {
  WriteText(path, ReplicationToCsv(result));
}

std::string ScatterToCsv(std::span<const ReplicationResult> results) {
  std::string out = "replication,kind,alpha,index,auroc,rbc,phi_pp,btc\n";
  auto row = [&](std::size_t r, const char* kind, const std::string& alpha,
                 std::size_t i, const CandidateEval& e) {
    out += std::to_string(r) + ',' + kind + ',' + alpha + ',' +
           std::to_string(i) + ',' + FormatDouble(e.auroc) + ',' +
           FormatDouble(e.rbc) + ',' + FormatDouble(e.phi_pp) + ',' +
           (e.btc ? FormatDouble(*e.btc) : std::string("nan")) + '\n';
  };
  for (std::size_t r = 0; r < results.size(); ++r) {
    const auto& res = results[r];
    for (std::size_t i = 0; i < res.bce.size(); ++i) {
      row(r, "bce", "1", i, res.bce[i]);
    }
    for (std::size_t a = 0; a < res.rbc.size(); ++a) {
      for (std::size_t i = 0; i < res.rbc[a].size(); ++i) {
        row(r, "rbc", FormatDouble(res.alphas[a]), i, res.rbc[a][i]);
      }
    }
  }
  return out;
}

std::string NuCurvesToCsv(std::span<const NuCurve> curves) {
  std::string out = "auroc_u,k,rbc,log10_count\n";
  for (const NuCurve& c : curves) {
    for (const NuPoint& p : c.points) {
      out += FormatDouble(c.auroc_u) + ',' + std::to_string(p.k) + ',' +
             FormatDouble(p.rbc) + ',' +
             FormatDouble(p.log_count / std::log(10.0)) + '\n';
    }
  }
  return out;
}

std::string BtcGridToCsv(const BtcGrid& grid) {
  std::string out =
      "tau_o,tau_u,btc,accuracy_o,accuracy_u,model_index,degenerate\n";
  for (std::size_t i = 0; i < grid.tau_o.size(); ++i) {
    for (std::size_t j = 0; j < grid.tau_u.size(); ++j) {
      const BtcCell& c = grid.cells[i][j];
      out += FormatDouble(grid.tau_o[i]) + ',' + FormatDouble(grid.tau_u[j]) +
             ',' + (c.degenerate ? std::string("nan") : FormatDouble(c.btc)) +
             ',' + FormatDouble(c.accuracy_o) + ',' +
             FormatDouble(c.accuracy_u) + ',' + std::to_string(c.model_index) +
             ',' + Bool(c.degenerate) + '\n';
    }
  }
  return out;
}

std::string HistogramToCsv(const Histogram& h) {
  std::string out = "bin_lo,bin_hi,mass\n";
  for (std::size_t i = 0; i < h.mass.size(); ++i) {
    const double lo = static_cast<double>(i) * h.bin;
    const double hi = std::min(1.0, lo + h.bin);
    out += FormatDouble(std::round(lo * 1e12) / 1e12) + ',' +
           FormatDouble(std::round(hi * 1e12) / 1e12) + ',' +
           FormatDouble(h.mass[i]) + '\n';
  }
  return out;
}

}  // namespace rankcompat
