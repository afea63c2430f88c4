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

#include "geosta/domain.hpp"

#include <filesystem>
#include <fstream>
#include <set>

#include "geosta/error.hpp"

namespace geosta {

namespace {

nlohmann::json label_to_json(const GeoLabel& label) {
  return {{"raw", label.raw}, {"canonical", label.canonical}};
}

GeoLabel label_from_json(const nlohmann::json& j) {
  return GeoLabel{j.at("raw").get<std::string>(), j.at("canonical").get<std::string>()};
}

Role role_from_string(const std::string& name) {
  if (name == "attack") return Role::kAttack;
  if (name == "target") return Role::kTarget;
  if (name == "judge") return Role::kJudge;
  raise(ErrorCode::kConfigError, "unknown role '" + name + "'");
}

Outcome outcome_from_string(const std::string& name) {
  if (name == "succeeded_stage1") return Outcome::kSucceededStage1;
  if (name == "succeeded_stage2") return Outcome::kSucceededStage2;
  if (name == "failed") return Outcome::kFailed;
  raise(ErrorCode::kConfigError, "unknown outcome '" + name + "'");
}

}  // namespace

const char* role_name(Role role) {
  switch (role) {
    case Role::kAttack: return "attack";
    case Role::kTarget: return "target";
    case Role::kJudge: return "judge";
  }
  return "?";
}

const char* placement_name(Placement placement) {
  switch (placement) {
    case Placement::kTop: return "top";
    case Placement::kBottom: return "bottom";
    case Placement::kLeft: return "left";
    case Placement::kRight: return "right";
  }
  return "?";
}

Placement placement_from_string(const std::string& name) {
  if (name == "top") return Placement::kTop;
  if (name == "bottom") return Placement::kBottom;
  if (name == "left") return Placement::kLeft;
  if (name == "right") return Placement::kRight;
  raise(ErrorCode::kConfigError, "unknown placement '" + name + "' (top|bottom|left|right)");
}

const char* match_mode_name(MatchMode mode) {
  return mode == MatchMode::kJudge ? "judge" : "canonical";
}

const char* outcome_name(Outcome outcome) {
  switch (outcome) {
    case Outcome::kSucceededStage1: return "succeeded_stage1";
    case Outcome::kSucceededStage2: return "succeeded_stage2";
    case Outcome::kFailed: return "failed";
  }
  return "?";
}

LocationRanking make_ranking(std::vector<GeoLabel> parsed) {
  LocationRanking ranking;
  std::set<std::string> seen;
  for (auto& label : parsed) {
    if (seen.insert(label.canonical).second) {
      ranking.entries.push_back(std::move(label));
    }
  }
  return ranking;
}

std::string AttackConfig::variant_id() const {
  if (clean_baseline) return "clean";
  if (instructional_enhancement && explanatory_stage) return "full";
  if (instructional_enhancement) return "tarloc_insenh";
  if (explanatory_stage) return "tarloc_expsta";
  return "tarloc";
}

void AttackConfig::validate() const {
  if (query_text.empty()) {
    raise(ErrorCode::kConfigError, "attack config: query_text must be non-empty");
  }
  if (max_refinement_rounds < 0) {
    raise(ErrorCode::kConfigError, "attack config: max_refinement_rounds must be >= 0");
  }
}

AttackConfig attack_config_for_variant(const std::string& variant_id) {
  AttackConfig config;
  if (variant_id == "clean") {
    config.clean_baseline = true;
    config.instructional_enhancement = false;
    config.explanatory_stage = false;
  } else if (variant_id == "tarloc") {
    config.instructional_enhancement = false;
    config.explanatory_stage = false;
  } else if (variant_id == "tarloc_insenh") {
    config.instructional_enhancement = true;
    config.explanatory_stage = false;
  } else if (variant_id == "tarloc_expsta") {
    config.instructional_enhancement = false;
    config.explanatory_stage = true;
  } else if (variant_id != "full") {
    raise(ErrorCode::kConfigError,
          "unknown variant '" + variant_id +
              "' (clean|tarloc|tarloc_insenh|tarloc_expsta|full)");
  }
  return config;
}

nlohmann::json attack_config_to_json(const AttackConfig& config) {
  return {
      {"clean_baseline", config.clean_baseline},
      {"instructional_enhancement", config.instructional_enhancement},
      {"explanatory_stage", config.explanatory_stage},
      {"placement", placement_name(config.placement)},
      {"platform_notice", config.platform_notice},
      {"query_text", config.query_text},
      {"max_refinement_rounds", config.max_refinement_rounds},
  };
}

AttackConfig attack_config_from_json(const nlohmann::json& j) {
  AttackConfig config;
  config.clean_baseline = j.value("clean_baseline", false);
  config.instructional_enhancement = j.value("instructional_enhancement", true);
  config.explanatory_stage = j.value("explanatory_stage", true);
  if (j.contains("placement")) {
    config.placement = placement_from_string(j.at("placement").get<std::string>());
  }
  config.platform_notice = j.value("platform_notice", false);
  config.query_text = j.value("query_text", std::string(kGeoQueryDefault));
  config.max_refinement_rounds = j.value("max_refinement_rounds", 1);
  config.validate();
  return config;
}

void validate_transcript(const AttackTranscript& t, const AttackConfig& config) {
  const auto fail = [&](const std::string& what) {
    raise(ErrorCode::kConfigError, "transcript '" + t.record_id + "': " + what);
  };
  const bool errored = !t.error_class.empty();
  const bool stage2_enabled = !config.clean_baseline && config.explanatory_stage &&
                              config.max_refinement_rounds > 0;

  if (t.record_id.empty()) fail("record_id missing");
  if (t.feedback.has_value() != t.stage2_text.has_value()) {
    fail("feedback and stage2_text must appear together");
  }
  if (t.feedback.has_value()) {
    if (t.stage1_success) fail("feedback present although stage 1 succeeded");
    if (config.clean_baseline) fail("feedback present on a clean-baseline run");
    if (!config.explanatory_stage) fail("feedback present although explanatory stage is off");
  } else if (!errored && !t.stage1_success && stage2_enabled &&
             t.outcome != Outcome::kSucceededStage1) {
    fail("stage 1 failed with explanatory stage on, but no feedback recorded");
  }
  if (config.clean_baseline) {
    if (!t.ranking.empty()) fail("clean-baseline run must not rank locations");
    if (!t.stage1_text.empty()) fail("clean-baseline run must not carry attack text");
    if (!t.target_location.canonical.empty()) {
      fail("clean-baseline run has no target location");
    }
  }
  if (!t.target_location.canonical.empty() &&
      labels_equal(t.target_location, t.gt_location)) {
    fail("target location equals ground truth");
  }
  switch (t.outcome) {
    case Outcome::kSucceededStage1:
      if (!t.stage1_success) fail("outcome succeeded_stage1 but stage1_success is false");
      if (t.final_image_ref != t.stage1_image_ref) {
        fail("succeeded_stage1 requires final_image_ref == stage1_image_ref");
      }
      break;
    case Outcome::kSucceededStage2:
      if (!t.feedback.has_value()) fail("succeeded_stage2 without feedback");
      if (!t.final_prediction.has_value()) fail("succeeded_stage2 without final prediction");
      break;
    case Outcome::kFailed:
      break;
  }
  if (!errored) {
    if (!config.clean_baseline && t.ranking.empty()) {
      fail("completed transcript without a ranking");
    }
    if (!t.stage1_prediction.has_value()) fail("completed transcript without stage-1 prediction");
  }
}

nlohmann::json transcript_to_json(const AttackTranscript& t) {
  nlohmann::json j;
  j["schema_version"] = t.schema_version;
  j["record_id"] = t.record_id;
  j["variant_id"] = t.variant_id;
  j["gt_location"] = label_to_json(t.gt_location);
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& e : t.ranking.entries) entries.push_back(label_to_json(e));
  j["ranking"] = entries;
  j["target_location"] = label_to_json(t.target_location);
  j["stage1_text"] = t.stage1_text;
  j["stage1_image_ref"] = t.stage1_image_ref;
  j["stage1_prediction"] =
      t.stage1_prediction ? label_to_json(*t.stage1_prediction) : nlohmann::json();
  j["stage1_success"] = t.stage1_success;
  j["feedback"] = t.feedback ? nlohmann::json(*t.feedback) : nlohmann::json();
  j["stage2_text"] = t.stage2_text ? nlohmann::json(*t.stage2_text) : nlohmann::json();
  j["final_image_ref"] = t.final_image_ref;
  j["final_prediction"] =
      t.final_prediction ? label_to_json(*t.final_prediction) : nlohmann::json();
  j["outcome"] = outcome_name(t.outcome);
  j["error_class"] = t.error_class;
  j["error_message"] = t.error_message;
  nlohmann::json log = nlohmann::json::array();
  for (const auto& entry : t.call_log) {
    log.push_back({{"role", role_name(entry.role)},
                   {"prompt_digest", entry.prompt_digest},
                   {"response_digest", entry.response_digest}});
  }
  j["call_log"] = log;
  if (!t.raw_exchanges.empty()) {
    nlohmann::json raw = nlohmann::json::array();
    for (const auto& [prompt, response] : t.raw_exchanges) {
      raw.push_back({{"prompt", prompt}, {"response", response}});
    }
    j["raw_exchanges"] = raw;
  }
  return j;
}

AttackTranscript transcript_from_json(const nlohmann::json& j) {
  AttackTranscript t;
  t.schema_version = j.value("schema_version", 1);
  t.record_id = j.at("record_id").get<std::string>();
  t.variant_id = j.value("variant_id", "");
  t.gt_location = label_from_json(j.at("gt_location"));
  for (const auto& e : j.at("ranking")) t.ranking.entries.push_back(label_from_json(e));
  t.target_location = label_from_json(j.at("target_location"));
  t.stage1_text = j.at("stage1_text").get<std::string>();
  t.stage1_image_ref = j.at("stage1_image_ref").get<std::string>();
  if (!j.at("stage1_prediction").is_null()) {
    t.stage1_prediction = label_from_json(j.at("stage1_prediction"));
  }
  t.stage1_success = j.at("stage1_success").get<bool>();
  if (!j.at("feedback").is_null()) t.feedback = j.at("feedback").get<std::string>();
  if (!j.at("stage2_text").is_null()) t.stage2_text = j.at("stage2_text").get<std::string>();
  t.final_image_ref = j.at("final_image_ref").get<std::string>();
  if (!j.at("final_prediction").is_null()) {
    t.final_prediction = label_from_json(j.at("final_prediction"));
  }
  t.outcome = outcome_from_string(j.at("outcome").get<std::string>());
  t.error_class = j.value("error_class", "");
  t.error_message = j.value("error_message", "");
  for (const auto& entry : j.at("call_log")) {
    t.call_log.push_back(CallLogEntry{
        role_from_string(entry.at("role").get<std::string>()),
        entry.at("prompt_digest").get<std::string>(),
        entry.at("response_digest").get<std::string>()});
  }
  if (j.contains("raw_exchanges")) {
    for (const auto& raw : j.at("raw_exchanges")) {
      t.raw_exchanges.emplace_back(raw.at("prompt").get<std::string>(),
                                   raw.at("response").get<std::string>());
    }
  }
  return t;
}

void save_transcript(const AttackTranscript& t, const std::string& path) {
  const auto parent = std::filesystem::path(path).parent_path();
  if (!parent.empty()) {
    std::error_code ec;
    std::filesystem::create_directories(parent, ec);
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) raise(ErrorCode::kIoError, "cannot open '" + path + "' for writing");
  out << transcript_to_json(t).dump(2) << '\n';
  if (!out) raise(ErrorCode::kIoError, "failed writing '" + path + "'");
}

AttackTranscript load_transcript(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) raise(ErrorCode::kIoError, "cannot open '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    raise(ErrorCode::kIoError, "bad transcript JSON in '" + path + "': " + e.what());
  }
  return transcript_from_json(j);
}

}  // namespace geosta
