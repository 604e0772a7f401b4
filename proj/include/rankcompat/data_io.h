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

// File formats.
//
// Dataset CSV: header `y,f0,...,f{d-1}`, one row per patient, LF line ends,
// doubles in shortest round-trip form.
// Model JSON: {"weights": [...], "intercept": x, "reg_l2": x,
//              "metadata": {"seed": n, "alpha": x, "epochs_run": n}}.
// Summary CSV: alpha,beta,mean_drbc,drbc_lo,drbc_hi,mean_dauroc,dauroc_lo,
//              dauroc_hi,improvement.

#ifndef RANKCOMPAT_DATA_IO_H_
#define RANKCOMPAT_DATA_IO_H_

#include <filesystem>
#include <string>
#include <string_view>

#include "rankcompat/combinatorics.h"
#include "rankcompat/dataset.h"
#include "rankcompat/model.h"
#include "rankcompat/pipeline.h"

#include "json.hpp"

namespace rankcompat {

enum class LabelMode { kBinary, kOrdinal };

// Shortest decimal that parses back to the same double.
std::string FormatDouble(double v);

std::string DatasetToCsv(const Dataset& data);
Dataset DatasetFromCsv(std::string_view text,
                       LabelMode mode = LabelMode::kBinary);
void SaveDataset(const std::filesystem::path& path, const Dataset& data);
Dataset LoadDataset(const std::filesystem::path& path,
                    LabelMode mode = LabelMode::kBinary);

nlohmann::json ModelToJson(const RiskModel& model);
RiskModel ModelFromJson(const nlohmann::json& j);
void SaveModel(const std::filesystem::path& path, const RiskModel& model);
RiskModel LoadModel(const std::filesystem::path& path);

std::string SummaryToCsv(const ExperimentSummary& summary);
// One row per (alpha, beta) selection of a single replication.
std::string ReplicationToCsv(const ReplicationResult& result);
void WriteReport(const std::filesystem::path& path,
                 const ExperimentSummary& summary);
void WriteReport(const std::filesystem::path& path,
                 const ReplicationResult& result);

// Held-out AUROC and RBC of every candidate, one row per candidate and
// replication.
std::string ScatterToCsv(std::span<const ReplicationResult> results);

// Columns: auroc_u,k,rbc,log10_count.
std::string NuCurvesToCsv(std::span<const NuCurve> curves);

// Columns: tau_o,tau_u,btc,accuracy_o,accuracy_u,model_index,degenerate.
std::string BtcGridToCsv(const BtcGrid& grid);

std::string HistogramToCsv(const Histogram& h);

void WriteText(const std::filesystem::path& path, std::string_view text);
std::string ReadText(const std::filesystem::path& path);

}  // namespace rankcompat

#endif  // RANKCOMPAT_DATA_IO_H_
