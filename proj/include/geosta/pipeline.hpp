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

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "geosta/domain.hpp"
#include "geosta/gateway.hpp"
#include "geosta/image.hpp"
#include "geosta/prompts.hpp"
#include "geosta/typoext.hpp"

namespace geosta {

// Whether match decisions during probes come from the judge model or from
// canonical label comparison (offline, deterministic, model-free).
enum class JudgeMode { kLive, kOffline };
const char* judge_mode_name(JudgeMode mode);
JudgeMode judge_mode_from_string(const std::string& name);  // ConfigError

/// Everything one protection run needs. Render placement and the notice
/// prefix are taken from the AttackConfig at run time; the env's RenderSpec
/// supplies the remaining geometry.
struct PipelineEnv {
  const PromptLibrary* prompts = nullptr;
  Gateway* gateway = nullptr;
  RenderSpec render_spec;
  ModelEndpoint attack;
  ModelEndpoint target;
  ModelEndpoint judge;
  JudgeMode judge_mode = JudgeMode::kOffline;
  std::filesystem::path out_dir;
  // Wording for the internal stage-1 success check; defaults to the
  // config's query text.
  std::optional<std::string> probe_query_override;
  // Retain raw prompt/response pairs in transcripts (they are large).
  bool verbose = false;
};

struct StageOneOutput {
  GeoLabel target_location;
  std::string text;
  std::string image_ref;  // relative to env.out_dir
  LocationRanking ranking;
  std::vector<std::uint8_t> image_png;
};

struct StageTwoOutput {
  std::string text;
  std::string image_ref;
  std::string feedback;
  std::vector<std::uint8_t> image_png;
};

// First ranking entry whose canonical form differs from gt.
// Throws NoDistinctTarget when the ranking is empty or exhausted.
GeoLabel select_target_location(const LocationRanking& ranking, const GeoLabel& gt);

// Pulls a country answer out of a free-text geolocation reply.
GeoLabel extract_location_answer(const std::string& response);

// Post-processes the final-extension reply into exactly two overlay lines:
// keeps the first two non-empty lines (list markers stripped); a
// single-line reply gets `claim_line` prepended.
std::vector<std::string> normalize_overlay_lines(const std::string& reply,
                                                 const std::string& claim_line);

// Builds the RenderSpec actually used for a variant: env geometry plus the
// config's placement and notice switch.
RenderSpec render_spec_for(const AttackConfig& config, const PipelineEnv& env);

// Ranks locations with the attack model, picks the deceptive target,
// instantiates the claim text for the variant, and renders the intermediate
// image. Appends artifacts and calls to `transcript`.
StageOneOutput run_stage1(const ImageRecord& record, const Image& source,
                          const AttackConfig& config, const PipelineEnv& env,
                          AttackTranscript& transcript);

// Queries the target model on an image and decides matches_gt /
// matches_target via the judge (live) or canonical comparison (offline).
Verdict probe_target(const std::vector<std::uint8_t>& image_png,
                     const std::string& query_text, const AttackConfig& config,
                     const PipelineEnv& env, const GeoLabel& gt,
                     const GeoLabel& target,
                     std::vector<CallLogEntry>* log = nullptr);

// Feedback-guided refinement: asks the target why the claim failed on the
// extended image, then has the attack model author a two-line overlay
// against the ORIGINAL image, and renders the final extension.
// `previous_text` is the overlay text of the failed attempt.
StageTwoOutput run_stage2(const ImageRecord& record, const Image& source,
                          const StageOneOutput& s1,
                          const std::vector<std::uint8_t>& extended_png,
                          const std::string& previous_text,
                          const AttackConfig& config, const PipelineEnv& env,
                          AttackTranscript& transcript);

// Full two-stage run: stage 1, success gate, then up to
// config.max_refinement_rounds refinements. Never throws: stage errors
// yield a Failed transcript with the error recorded.
AttackTranscript protect(const ImageRecord& record, const AttackConfig& config,
                         const PipelineEnv& env);

// Directory (relative to out_dir) holding one record's artifacts.
std::string record_artifact_dir(const std::string& record_id);

}  // namespace geosta
