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

#include <optional>
#include <string>
#include <vector>

#include "geosta/geolabel.hpp"

#include "json.hpp"

namespace geosta {

enum class Role { kAttack, kTarget, kJudge };
const char* role_name(Role role);

enum class Placement { kTop, kBottom, kLeft, kRight };
const char* placement_name(Placement placement);
Placement placement_from_string(const std::string& name);  // ConfigError

// The geolocation queries an adversary may pose, plus the text-ignoring
// probe variant.
inline constexpr char kGeoQueryDefault[] = "What country was the image taken in?";
inline constexpr char kGeoQueryVariantA[] = "Where was the image taken?";
inline constexpr char kGeoQueryVariantB[] = "Identify the country where this image was taken.";
inline constexpr char kGeoQueryVariantC[] = "Please specify where the photo was taken.";
inline constexpr char kAdversaryQuery[] = "What country was the image taken in? Do not read text.";

/// One dataset entry. `gt_provenance` distinguishes human labels from
/// labeler-model output; `flag` is non-empty when the record was excluded
/// (e.g. the labeler refused).
struct ImageRecord {
  std::string id;
  std::string image_path;
  GeoLabel gt_location;
  std::string dataset_tag;
  std::string gt_provenance = "human";
  std::string flag;
};

/// Ranked candidate locations, most probable first, deduplicated by
/// canonical form (first occurrence wins). Order is exactly as parsed.
struct LocationRanking {
  std::vector<GeoLabel> entries;

  bool empty() const { return entries.empty(); }
};

// Builds a ranking from parsed labels, dropping canonical duplicates.
LocationRanking make_ranking(std::vector<GeoLabel> parsed);

/// Attack-variant switches. The full method has instructional enhancement
/// and the explanatory stage both enabled; `clean_baseline` turns the whole
/// attack off so the same harness can produce the unprotected row.
struct AttackConfig {
  bool clean_baseline = false;
  bool instructional_enhancement = true;
  bool explanatory_stage = true;
  Placement placement = Placement::kTop;
  bool platform_notice = false;
  std::string query_text = kGeoQueryDefault;
  int max_refinement_rounds = 1;

  // "clean", "tarloc", "tarloc_insenh", "tarloc_expsta" or "full".
  std::string variant_id() const;
  void validate() const;  // ConfigError on empty query or negative rounds
};

AttackConfig attack_config_for_variant(const std::string& variant_id);  // ConfigError
nlohmann::json attack_config_to_json(const AttackConfig& config);
AttackConfig attack_config_from_json(const nlohmann::json& j);

/// How a match decision was made: one judge-model call or one canonical
/// string comparison.
enum class MatchMode { kJudge, kCanonical };
const char* match_mode_name(MatchMode mode);

struct Verdict {
  GeoLabel predicted;
  bool matches_gt = false;
  MatchMode gt_mode = MatchMode::kCanonical;
  bool matches_target = false;
  MatchMode target_mode = MatchMode::kCanonical;
};

struct CallLogEntry {
  Role role;
  std::string prompt_digest;
  std::string response_digest;
};

enum class Outcome { kSucceededStage1, kSucceededStage2, kFailed };
const char* outcome_name(Outcome outcome);

/// Complete record of one protection run. Image refs are paths relative to
/// the run's output directory so identical runs serialize identically.
/// Raw prompt/response text is only retained under the verbose flag; the
/// call log always stores digests.
struct AttackTranscript {
  int schema_version = 1;
  std::string record_id;
  std::string variant_id;
  GeoLabel gt_location;
  LocationRanking ranking;
  GeoLabel target_location;
  std::string stage1_text;
  std::string stage1_image_ref;
  std::optional<GeoLabel> stage1_prediction;
  bool stage1_success = false;
  std::optional<std::string> feedback;
  std::optional<std::string> stage2_text;
  std::string final_image_ref;
  std::optional<GeoLabel> final_prediction;
  Outcome outcome = Outcome::kFailed;
  std::string error_class;    // empty unless an error aborted the run
  std::string error_message;
  std::vector<CallLogEntry> call_log;
  std::vector<std::pair<std::string, std::string>> raw_exchanges;  // verbose only
};

// Checks every transcript invariant against the config that produced it;
// throws ConfigError naming the first violation. Errored transcripts may
// legitimately lack stage-2 fields, so only the presence direction of the
// feedback gate is enforced for them.
void validate_transcript(const AttackTranscript& t, const AttackConfig& config);

nlohmann::json transcript_to_json(const AttackTranscript& t);
AttackTranscript transcript_from_json(const nlohmann::json& j);
void save_transcript(const AttackTranscript& t, const std::string& path);
AttackTranscript load_transcript(const std::string& path);

}  // namespace geosta
