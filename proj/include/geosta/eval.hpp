// Copyright 2026 The GeoSTA Authors. All rights reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <compare>
#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "geosta/domain.hpp"
#include "geosta/gateway.hpp"
#include "geosta/manifest.hpp"
#include "geosta/pipeline.hpp"

namespace geosta {

// Fraction of verdicts where the model's prediction differs from ground
// truth. Throws EmptyCell on an empty list. Counts are divided exactly
// once, so asr_hits + gt_hits == n always holds in integers.
double compute_asr(const std::vector<Verdict>& verdicts);

// Fraction where the prediction matches the claimed target exactly. A
// third-country prediction counts toward ASR but not TASR.
double compute_tasr(const std::vector<Verdict>& verdicts,
                    const std::vector<GeoLabel>& targets);  // EmptyCell, LengthMismatch

struct CellKey {
  std::string dataset;
  std::string target_model;
  std::string variant_id;
  std::string query_variant;

  auto operator<=>(const CellKey&) const = default;
};

struct CellFailure {
  std::string record_id;
  std::string error_class;

  bool operator==(const CellFailure&) const = default;
};

/// One evaluation cell. n counts non-errored records only; errored records
/// are listed in `failures` and never silently dropped, so
/// n + failures.size() == records entering the cell.
struct Cell {
  int n = 0;
  int asr_hits = 0;   // prediction differed from gt
  int tasr_hits = 0;  // prediction matched the claimed target
  std::vector<CellFailure> failures;

  bool operator==(const Cell&) const = default;

  double asr() const;
  double tasr() const;
};

struct EvalReport {
  int schema_version = 1;
  std::map<std::string, std::string> config_digests;  // variant_id -> digest
  std::map<CellKey, Cell> cells;

  bool operator==(const EvalReport&) const = default;
};

/// Matrix-run wiring. `craft_target` is the model the attack probes while
/// crafting; `eval_targets` are the models every final image is evaluated
/// against (decoupling the two is what enables transfer studies).
/// `eval_queries`, when non-empty, adds a query axis at evaluation time
/// without recrafting.
struct EvalEnv {
  const PromptLibrary* prompts = nullptr;
  Gateway* gateway = nullptr;
  RenderSpec render_spec;
  ModelEndpoint attack;
  ModelEndpoint craft_target;
  std::vector<ModelEndpoint> eval_targets;
  ModelEndpoint judge;
  JudgeMode judge_mode = JudgeMode::kOffline;
  std::filesystem::path out_dir;
  std::vector<std::string> eval_queries;
  int parallelism = 1;
  int sample_per_dataset = 0;  // <=0 evaluates everything
  std::uint64_t sample_seed = 0;
};

// Crafts each (record, config) once against craft_target, evaluates every
// final image against every eval target and query, and aggregates per
// (dataset, target model, variant, query) cell in manifest order. Errored
// records land in their cell's failure list; transcripts are persisted
// under out_dir/<variant>/<record>/.
EvalReport run_matrix(const Manifest& manifest,
                      const std::vector<AttackConfig>& configs,
                      const EvalEnv& env);  // ConfigError on empty manifest

// Fills missing gt_location fields using the labeler model; existing labels
// are untouched. Refusals flag the record and leave gt empty.
Manifest label_ground_truth(const Manifest& manifest, const ModelEndpoint& labeler,
                            Gateway& gateway, const PromptLibrary& prompts);

// True when a labeler reply looks like a refusal rather than a location.
bool looks_like_refusal(const std::string& response);

enum class ReportFormat { kJson, kCsv, kMarkdown };
ReportFormat report_format_from_string(const std::string& name);  // ConfigError
ReportFormat report_format_for_path(const std::filesystem::path& path);

nlohmann::json report_to_json(const EvalReport& report);
EvalReport report_from_json(const nlohmann::json& j);
std::string report_to_csv(const EvalReport& report);
// One methods-by-models table per (dataset, query) group.
std::string report_to_markdown(const EvalReport& report);

void emit_report(const EvalReport& report, ReportFormat format,
                 const std::filesystem::path& path);  // IoError

// Fixed-decimal ratio rendering used by csv/markdown ("0.92" style).
std::string format_ratio(int hits, int n, int decimals);

}  // namespace geosta
