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

#include "geosta/eval.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <fstream>
#include <set>
#include <thread>

#include "geosta/digest.hpp"
#include "geosta/error.hpp"
#include "geosta/image.hpp"
#include "geosta/unicode.hpp"

namespace geosta {

using nlohmann::json;

namespace {

// Everything one record contributes to the matrix, gathered by a worker and
// merged later in manifest order.
struct ProbeResult {
  bool ok = false;
  std::string error_class;
  Verdict verdict;
};

struct RecordResult {
  std::vector<std::string> craft_error;  // per config, empty = crafted fine
  std::vector<ProbeResult> probes;       // config-major, then target, then query
};

std::vector<std::string> queries_for(const AttackConfig& config,
                                     const EvalEnv& env) {
  if (!env.eval_queries.empty()) return env.eval_queries;
  return {config.query_text};
}

std::string failure_class_of(std::exception_ptr error) {
  try {
    std::rethrow_exception(error);
  } catch (const Error& e) {
    return error_code_name(e.code());
  } catch (const std::exception&) {
    return "Unexpected";
  }
}

}  // namespace

double compute_asr(const std::vector<Verdict>& verdicts) {
  if (verdicts.empty()) raise(ErrorCode::kEmptyCell, "no verdicts to aggregate");
  int misses = 0;
  for (const auto& v : verdicts) {
    if (!v.matches_gt) ++misses;
  }
  return static_cast<double>(misses) / static_cast<double>(verdicts.size());
}

double compute_tasr(const std::vector<Verdict>& verdicts,
                    const std::vector<GeoLabel>& targets) {
  if (verdicts.empty()) raise(ErrorCode::kEmptyCell, "no verdicts to aggregate");
  if (verdicts.size() != targets.size()) {
    raise(ErrorCode::kLengthMismatch,
          std::to_string(verdicts.size()) + " verdicts vs " +
              std::to_string(targets.size()) + " targets");
  }
  int hits = 0;
  for (const auto& v : verdicts) {
    if (v.matches_target) ++hits;
  }
  return static_cast<double>(hits) / static_cast<double>(verdicts.size());
}

double Cell::asr() const {
  if (n == 0) raise(ErrorCode::kEmptyCell, "cell has no scored records");
  return static_cast<double>(asr_hits) / static_cast<double>(n);
}

double Cell::tasr() const {
  if (n == 0) raise(ErrorCode::kEmptyCell, "cell has no scored records");
  return static_cast<double>(tasr_hits) / static_cast<double>(n);
}

EvalReport run_matrix(const Manifest& manifest,
                      const std::vector<AttackConfig>& configs,
                      const EvalEnv& env) {
  if (manifest.records.empty()) {
    raise(ErrorCode::kConfigError, "manifest is empty; nothing to evaluate");
  }
  if (configs.empty()) {
    raise(ErrorCode::kConfigError, "no attack configs given");
  }
  if (env.eval_targets.empty()) {
    raise(ErrorCode::kConfigError, "no evaluation targets given");
  }
  for (const auto& config : configs) config.validate();

  const std::vector<ImageRecord> records =
      sample_records(manifest, env.sample_per_dataset, env.sample_seed);
  if (records.empty()) {
    raise(ErrorCode::kConfigError, "sampling selected zero records");
  }

  const std::size_t n_targets = env.eval_targets.size();
  std::vector<RecordResult> results(records.size());

  auto process_record = [&](std::size_t ri) {
    const ImageRecord& base = records[ri];
    RecordResult& result = results[ri];
    result.craft_error.resize(configs.size());

    ImageRecord record = base;
    record.image_path = resolve_image_path(manifest, base);

    for (std::size_t ci = 0; ci < configs.size(); ++ci) {
      const AttackConfig& config = configs[ci];
      const auto queries = queries_for(config, env);
      const auto probe_base = result.probes.size();
      result.probes.resize(probe_base + n_targets * queries.size());

      if (!base.flag.empty()) {
        // Flagged upstream (labeler refusal etc.): listed, never scored.
        result.craft_error[ci] = "Flagged";
        continue;
      }

      PipelineEnv craft_env;
      craft_env.prompts = env.prompts;
      craft_env.gateway = env.gateway;
      craft_env.render_spec = env.render_spec;
      craft_env.attack = env.attack;
      craft_env.target = env.craft_target;
      craft_env.judge = env.judge;
      craft_env.judge_mode = env.judge_mode;
      craft_env.out_dir = env.out_dir / config.variant_id();

      const AttackTranscript transcript = protect(record, config, craft_env);
      save_transcript(transcript,
                      (craft_env.out_dir / record_artifact_dir(record.id) /
                       "transcript.json")
                          .string());
      if (!transcript.error_class.empty()) {
        result.craft_error[ci] = transcript.error_class;
        continue;
      }

      // Evaluate the exact bytes the renderer wrote; re-encoding here would
      // quietly change the cache identity of every probe.
      const auto final_png = read_file_bytes(
          (craft_env.out_dir / transcript.final_image_ref).string());

      for (std::size_t ti = 0; ti < n_targets; ++ti) {
        PipelineEnv probe_env = craft_env;
        probe_env.target = env.eval_targets[ti];
        for (std::size_t qi = 0; qi < queries.size(); ++qi) {
          ProbeResult& probe = result.probes[probe_base + ti * queries.size() + qi];
          try {
            probe.verdict =
                probe_target(final_png, queries[qi], config, probe_env,
                             record.gt_location, transcript.target_location);
            probe.ok = true;
          } catch (...) {
            probe.error_class = failure_class_of(std::current_exception());
          }
        }
      }
    }
  };

  const int workers =
      std::clamp<int>(env.parallelism, 1, static_cast<int>(records.size()));
  if (workers <= 1) {
    for (std::size_t ri = 0; ri < records.size(); ++ri) process_record(ri);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t ri = next.fetch_add(1); ri < records.size();
             ri = next.fetch_add(1)) {
          process_record(ri);
        }
      });
    }
    for (auto& t : pool) t.join();
  }

  // Merge in manifest order so the report is independent of scheduling.
  EvalReport report;
  for (const auto& config : configs) {
    report.config_digests[config.variant_id()] =
        sha256_hex(attack_config_to_json(config).dump());
  }
  for (std::size_t ri = 0; ri < records.size(); ++ri) {
    const ImageRecord& record = records[ri];
    const RecordResult& result = results[ri];
    std::size_t probe_base = 0;
    for (std::size_t ci = 0; ci < configs.size(); ++ci) {
      const AttackConfig& config = configs[ci];
      const auto queries = queries_for(config, env);
      for (std::size_t ti = 0; ti < n_targets; ++ti) {
        for (std::size_t qi = 0; qi < queries.size(); ++qi) {
          const CellKey key{record.dataset_tag,
                            env.eval_targets[ti].model_name, config.variant_id(),
                            query_variant_id_for_text(queries[qi])};
          Cell& cell = report.cells[key];
          if (!result.craft_error[ci].empty()) {
            cell.failures.push_back(CellFailure{record.id, result.craft_error[ci]});
            continue;
          }
          const ProbeResult& probe =
              result.probes[probe_base + ti * queries.size() + qi];
          if (!probe.ok) {
            cell.failures.push_back(CellFailure{record.id, probe.error_class});
            continue;
          }
          ++cell.n;
          if (!probe.verdict.matches_gt) ++cell.asr_hits;
          if (probe.verdict.matches_target) ++cell.tasr_hits;
        }
      }
      probe_base += n_targets * queries.size();
    }
  }
  return report;
}

Manifest label_ground_truth(const Manifest& manifest, const ModelEndpoint& labeler,
                            Gateway& gateway, const PromptLibrary& prompts) {
  Manifest out = manifest;
  const std::string query = prompts.render_geo_query(QueryVariant::kDefault);
  for (auto& record : out.records) {
    if (!record.gt_location.empty()) continue;
    try {
      const Image image = load_image(resolve_image_path(out, record));
      const std::string reply =
          gateway.chat_with_image(labeler, encode_png(image), query);
      if (looks_like_refusal(reply)) {
        record.flag = "labeler_refused";
        continue;
      }
      record.gt_location = extract_location_answer(reply);
      record.gt_provenance = "model-labeled";
    } catch (const Error& e) {
      record.flag = error_code_name(e.code());
    }
  }
  return out;
}

bool looks_like_refusal(const std::string& response) {
  const std::string folded = to_lower_ascii(ascii_fold(response));
  static const char* kPatterns[] = {
      "i cannot",      "i can't",       "i am sorry",     "i'm sorry",
      "unable to",     "not able to",   "i won't",        "cannot assist",
      "can't assist",  "cannot help",   "can't help",     "cannot determine",
      "can't determine", "refuse",
  };
  for (const char* pattern : kPatterns) {
    if (folded.find(pattern) != std::string::npos) return true;
  }
  return false;
}

ReportFormat report_format_from_string(const std::string& name) {
  if (name == "json") return ReportFormat::kJson;
  if (name == "csv") return ReportFormat::kCsv;
  if (name == "markdown" || name == "md") return ReportFormat::kMarkdown;
  raise(ErrorCode::kConfigError,
        "unknown report format '" + name + "' (json|csv|markdown)");
}

ReportFormat report_format_for_path(const std::filesystem::path& path) {
  const auto ext = path.extension().string();
  if (ext == ".csv") return ReportFormat::kCsv;
  if (ext == ".md" || ext == ".markdown") return ReportFormat::kMarkdown;
  return ReportFormat::kJson;
}

json report_to_json(const EvalReport& report) {
  json cells = json::array();
  for (const auto& [key, cell] : report.cells) {
    json failures = json::array();
    for (const auto& failure : cell.failures) {
      failures.push_back({{"record_id", failure.record_id},
                          {"error_class", failure.error_class}});
    }
    json row{{"dataset", key.dataset},
             {"target_model", key.target_model},
             {"variant", key.variant_id},
             {"query_variant", key.query_variant},
             {"n", cell.n},
             {"asr_hits", cell.asr_hits},
             {"tasr_hits", cell.tasr_hits},
             {"asr", cell.n > 0 ? json(cell.asr()) : json()},
             {"tasr", cell.n > 0 ? json(cell.tasr()) : json()},
             {"failures", failures}};
    cells.push_back(std::move(row));
  }
  return json{{"schema_version", report.schema_version},
              {"config_digests", report.config_digests},
              {"cells", cells}};
}

EvalReport report_from_json(const json& j) {
  EvalReport report;
  try {
    report.schema_version = j.at("schema_version").get<int>();
    if (j.contains("config_digests")) {
      report.config_digests =
          j["config_digests"].get<std::map<std::string, std::string>>();
    }
    for (const auto& row : j.at("cells")) {
      const CellKey key{row.at("dataset").get<std::string>(),
                        row.at("target_model").get<std::string>(),
                        row.at("variant").get<std::string>(),
                        row.at("query_variant").get<std::string>()};
      Cell cell;
      cell.n = row.at("n").get<int>();
      cell.asr_hits = row.at("asr_hits").get<int>();
      cell.tasr_hits = row.at("tasr_hits").get<int>();
      for (const auto& failure : row.at("failures")) {
        cell.failures.push_back(
            CellFailure{failure.at("record_id").get<std::string>(),
                        failure.at("error_class").get<std::string>()});
      }
      report.cells[key] = std::move(cell);
    }
  } catch (const json::exception& e) {
    raise(ErrorCode::kConfigError, std::string("bad report JSON: ") + e.what());
  }
  return report;
}

std::string format_ratio(int hits, int n, int decimals) {
  if (n <= 0) raise(ErrorCode::kEmptyCell, "ratio over zero records");
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.*f", decimals,
                static_cast<double>(hits) / static_cast<double>(n));
  return buffer;
}

std::string report_to_csv(const EvalReport& report) {
  // Column order is part of the format contract; see the README.
  std::string out =
      "dataset,target_model,variant,query_variant,n,asr,tasr,failures\n";
  for (const auto& [key, cell] : report.cells) {
    out += key.dataset + "," + key.target_model + "," + key.variant_id + "," +
           key.query_variant + "," + std::to_string(cell.n) + ",";
    out += cell.n > 0 ? format_ratio(cell.asr_hits, cell.n, 4) : "";
    out += ",";
    out += cell.n > 0 ? format_ratio(cell.tasr_hits, cell.n, 4) : "";
    out += ",";
    std::string failures;
    for (const auto& failure : cell.failures) {
      if (!failures.empty()) failures += ";";
      failures += failure.record_id + ":" + failure.error_class;
    }
    out += failures + "\n";
  }
  return out;
}

std::string report_to_markdown(const EvalReport& report) {
  // One methods-by-models table per (dataset, query) pair, ASR / TASR cells.
  std::set<std::pair<std::string, std::string>> groups;
  std::set<std::string> models;
  for (const auto& [key, cell] : report.cells) {
    groups.insert({key.dataset, key.query_variant});
    models.insert(key.target_model);
  }
  static const char* kVariantOrder[] = {"clean", "tarloc", "tarloc_insenh",
                                        "tarloc_expsta", "full"};
  std::string out;
  for (const auto& [dataset, query] : groups) {
    std::vector<std::string> variants;
    for (const char* v : kVariantOrder) {
      for (const auto& [key, cell] : report.cells) {
        if (key.dataset == dataset && key.query_variant == query &&
            key.variant_id == v) {
          variants.push_back(v);
          break;
        }
      }
    }
    for (const auto& [key, cell] : report.cells) {
      if (key.dataset != dataset || key.query_variant != query) continue;
      if (std::find(variants.begin(), variants.end(), key.variant_id) ==
          variants.end()) {
        variants.push_back(key.variant_id);
      }
    }

    out += "## " + dataset + " (query: " + query + ")\n\n";
    out += "| method |";
    for (const auto& model : models) out += " " + model + " |";
    out += "\n|---|";
    for (std::size_t i = 0; i < models.size(); ++i) out += "---|";
    out += "\n";
    for (const auto& variant : variants) {
      out += "| " + variant + " |";
      for (const auto& model : models) {
        const auto it = report.cells.find(CellKey{dataset, model, variant, query});
        if (it == report.cells.end() || it->second.n == 0) {
          out += " n/a |";
          continue;
        }
        const Cell& cell = it->second;
        out += " " + format_ratio(cell.asr_hits, cell.n, 2) + " / " +
               format_ratio(cell.tasr_hits, cell.n, 2) + " |";
      }
      out += "\n";
    }
    out += "\n";
  }
  return out;
}

void emit_report(const EvalReport& report, ReportFormat format,
                 const std::filesystem::path& path) {
  std::string payload;
  switch (format) {
    case ReportFormat::kJson:
      payload = report_to_json(report).dump(2) + "\n";
      break;
    case ReportFormat::kCsv:
      payload = report_to_csv(report);
      break;
    case ReportFormat::kMarkdown:
      payload = report_to_markdown(report);
      break;
  }
  if (path.has_parent_path()) {
    std::error_code ec;
    std::filesystem::create_directories(path.parent_path(), ec);
  }
  std::ofstream out(path, std::ios::trunc);
  if (!out) raise(ErrorCode::kIoError, "cannot open '" + path.string() + "' for writing");
  out << payload;
  if (!out) raise(ErrorCode::kIoError, "failed writing '" + path.string() + "'");
}

}  // namespace geosta
