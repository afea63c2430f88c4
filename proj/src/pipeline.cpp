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

#include "geosta/pipeline.hpp"

#include <algorithm>

#include "geosta/error.hpp"
#include "geosta/unicode.hpp"

namespace geosta {

namespace {

// Gateway call that also captures the raw exchange when the env asks for it.
std::string call_model(const PipelineEnv& env, const ModelEndpoint& endpoint,
                       const std::optional<std::vector<std::uint8_t>>& image_png,
                       const std::string& prompt, AttackTranscript& transcript) {
  const std::string response = env.gateway->chat_with_image(
      endpoint, image_png, prompt, &transcript.call_log);
  if (env.verbose) transcript.raw_exchanges.emplace_back(prompt, response);
  return response;
}

std::string strip_list_marker(const std::string& line) {
  std::string s = trim(line);
  std::size_t i = 0;
  while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i;
  if (i > 0 && i < s.size() && (s[i] == '.' || s[i] == ')')) {
    s = trim(s.substr(i + 1));
  } else if (!s.empty() && (s[0] == '-' || s[0] == '*')) {
    s = trim(s.substr(1));
  }
  while (s.size() >= 2 && ((s.front() == '"' && s.back() == '"') ||
                           (s.front() == '*' && s.back() == '*'))) {
    s = trim(s.substr(1, s.size() - 2));
  }
  return s;
}

void ensure_parent_dir(const std::filesystem::path& file) {
  std::error_code ec;
  std::filesystem::create_directories(file.parent_path(), ec);
  if (ec) {
    raise(ErrorCode::kIoError, "cannot create directory '" +
                                   file.parent_path().string() +
                                   "': " + ec.message());
  }
}

std::string write_artifact(const PipelineEnv& env, const std::string& record_id,
                           const std::string& name,
                           const std::vector<std::uint8_t>& png) {
  const std::string ref = record_artifact_dir(record_id) + "/" + name;
  const auto path = env.out_dir / ref;
  ensure_parent_dir(path);
  write_file_bytes(path.string(), png);
  return ref;
}

std::string probe_query_for(const AttackConfig& config, const PipelineEnv& env) {
  return env.probe_query_override ? *env.probe_query_override : config.query_text;
}

std::string claim_line_for(const AttackConfig& config, const PromptLibrary& prompts,
                           const GeoLabel& target) {
  return config.instructional_enhancement
             ? prompts.render_instructional_claim(target)
             : prompts.render_naive_claim(target);
}

}  // namespace

const char* judge_mode_name(JudgeMode mode) {
  return mode == JudgeMode::kLive ? "live" : "offline";
}

JudgeMode judge_mode_from_string(const std::string& name) {
  if (name == "live") return JudgeMode::kLive;
  if (name == "offline") return JudgeMode::kOffline;
  raise(ErrorCode::kConfigError, "unknown judge mode '" + name + "' (live|offline)");
}

GeoLabel select_target_location(const LocationRanking& ranking, const GeoLabel& gt) {
  for (const auto& entry : ranking.entries) {
    if (!labels_equal(entry, gt)) return entry;
  }
  raise(ErrorCode::kNoDistinctTarget,
        "every ranked location matches the ground truth '" + gt.raw + "'");
}

GeoLabel extract_location_answer(const std::string& response) {
  std::string line;
  {
    std::string current;
    for (char c : response) {
      if (c == '\n') {
        if (!trim(current).empty()) break;
        current.clear();
      } else {
        current.push_back(c);
      }
    }
    line = trim(current);
  }
  if (line.empty()) {
    raise(ErrorCode::kMalformedResponse, "geolocation reply is empty");
  }

  // "Country: X" / "Answer: X" style lead-ins.
  if (const auto colon = line.rfind(':'); colon != std::string::npos &&
                                          colon + 1 < line.size()) {
    const std::string after = trim(line.substr(colon + 1));
    if (!after.empty()) line = after;
  }

  // Prose answers: the location usually follows the last " in " or " is ".
  const std::string lower = to_lower_ascii(line);
  for (const char* marker : {" in ", " is "}) {
    const auto pos = lower.rfind(marker);
    if (pos != std::string::npos) {
      line = trim(line.substr(pos + 4));
      break;
    }
  }

  for (char sep : {',', ';', '('}) {
    const auto pos = line.find(sep);
    if (pos != std::string::npos) line = trim(line.substr(0, pos));
  }
  while (!line.empty() && (line.back() == '.' || line.back() == '!')) line.pop_back();
  while (line.size() >= 2 && ((line.front() == '"' && line.back() == '"') ||
                              (line.front() == '*' && line.back() == '*'))) {
    line = trim(line.substr(1, line.size() - 2));
  }
  try {
    return normalize_label(line);
  } catch (const Error&) {
    raise(ErrorCode::kMalformedResponse,
          "no location found in reply: '" + trim(response).substr(0, 120) + "'");
  }
}

std::vector<std::string> normalize_overlay_lines(const std::string& reply,
                                                 const std::string& claim_line) {
  std::vector<std::string> lines;
  std::string current;
  auto flush = [&] {
    const std::string cleaned = strip_list_marker(current);
    if (!cleaned.empty()) lines.push_back(cleaned);
    current.clear();
  };
  for (char c : reply) {
    if (c == '\n') {
      flush();
    } else if (c != '\r') {
      current.push_back(c);
    }
  }
  flush();

  if (lines.empty()) {
    raise(ErrorCode::kEmptyText, "overlay reply contained no usable lines");
  }
  if (lines.size() == 1) return {claim_line, lines[0]};
  return {lines[0], lines[1]};
}

RenderSpec render_spec_for(const AttackConfig& config, const PipelineEnv& env) {
  RenderSpec spec = env.render_spec;
  spec.placement = config.placement;
  spec.notice_prefix = config.platform_notice
                           ? std::optional<std::string>(kPlatformNoticePrefix)
                           : std::nullopt;
  return spec;
}

std::string record_artifact_dir(const std::string& record_id) {
  std::string dir;
  dir.reserve(record_id.size());
  for (char c : record_id) {
    const bool safe = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
                      (c >= '0' && c <= '9') || c == '.' || c == '-' || c == '_';
    dir.push_back(safe ? c : '_');
  }
  return dir;
}

StageOneOutput run_stage1(const ImageRecord& record, const Image& source,
                          const AttackConfig& config, const PipelineEnv& env,
                          AttackTranscript& transcript) {
  const PromptLibrary& prompts = *env.prompts;
  const std::vector<std::uint8_t> source_png = encode_png(source);

  const std::string select_prompt = prompts.render_location_select();
  const std::string reply =
      call_model(env, env.attack, source_png, select_prompt, transcript);
  LocationRanking ranking = parse_ranking(reply);

  GeoLabel target;
  try {
    target = select_target_location(ranking, record.gt_location);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kNoDistinctTarget) throw;
    // The model ranked nothing but the ground truth; ask once more with the
    // ground truth explicitly excluded before giving up.
    const std::string retry_prompt =
        select_prompt + "\n" + prompts.exclusion_addendum(record.gt_location);
    const std::string retry_reply =
        call_model(env, env.attack, source_png, retry_prompt, transcript);
    LocationRanking retry_ranking = parse_ranking(retry_reply);
    target = select_target_location(retry_ranking, record.gt_location);
    std::vector<GeoLabel> merged = ranking.entries;
    merged.insert(merged.end(), retry_ranking.entries.begin(),
                  retry_ranking.entries.end());
    ranking = make_ranking(std::move(merged));
  }

  StageOneOutput out;
  out.target_location = target;
  out.ranking = ranking;
  out.text = claim_line_for(config, prompts, target);

  const Image extended = extend_image(source, out.text, render_spec_for(config, env));
  out.image_png = encode_png(extended);
  out.image_ref = write_artifact(env, record.id, "stage1.png", out.image_png);

  transcript.ranking = out.ranking;
  transcript.target_location = out.target_location;
  transcript.stage1_text = out.text;
  transcript.stage1_image_ref = out.image_ref;
  return out;
}

Verdict probe_target(const std::vector<std::uint8_t>& image_png,
                     const std::string& query_text, const AttackConfig& config,
                     const PipelineEnv& env, const GeoLabel& gt,
                     const GeoLabel& target, std::vector<CallLogEntry>* log) {
  (void)config;
  const std::string reply =
      env.gateway->chat_with_image(env.target, image_png, query_text, log);

  Verdict verdict;
  verdict.predicted = extract_location_answer(reply);
  if (env.judge_mode == JudgeMode::kLive) {
    verdict.gt_mode = MatchMode::kJudge;
    verdict.matches_gt = judge_match(*env.gateway, *env.prompts, env.judge,
                                     verdict.predicted.raw, gt.raw, log);
    if (!target.empty()) {
      verdict.target_mode = MatchMode::kJudge;
      verdict.matches_target = judge_match(*env.gateway, *env.prompts, env.judge,
                                           verdict.predicted.raw, target.raw, log);
    }
  } else {
    verdict.matches_gt = labels_equal(verdict.predicted, gt);
    if (!target.empty()) {
      verdict.matches_target = labels_equal(verdict.predicted, target);
    }
  }
  return verdict;
}

StageTwoOutput run_stage2(const ImageRecord& record, const Image& source,
                          const StageOneOutput& s1,
                          const std::vector<std::uint8_t>& extended_png,
                          const std::string& previous_text,
                          const AttackConfig& config, const PipelineEnv& env,
                          AttackTranscript& transcript) {
  const PromptLibrary& prompts = *env.prompts;

  // Feedback comes from the target model looking at the failed extension.
  const std::string reason_prompt =
      prompts.render_prediction_reason(s1.target_location);
  const std::string feedback =
      call_model(env, env.target, extended_png, reason_prompt, transcript);
  if (trim(feedback).empty()) {
    raise(ErrorCode::kEmptyFeedback, "target model returned blank feedback");
  }

  // The refined overlay is authored against the ORIGINAL image so the attack
  // model reasons about the pixels the claim must survive, not its own text.
  const std::string extension_prompt = prompts.render_final_extension(
      feedback, previous_text, s1.target_location, record.gt_location);
  const std::string reply = call_model(env, env.attack, encode_png(source),
                                       extension_prompt, transcript);

  const std::string claim = claim_line_for(config, prompts, s1.target_location);
  std::vector<std::string> lines = normalize_overlay_lines(reply, claim);
  if (!config.instructional_enhancement) lines[0] = claim;

  StageTwoOutput out;
  out.feedback = feedback;
  out.text = lines[0] + "\n" + lines[1];

  const Image final_image =
      extend_image(source, out.text, render_spec_for(config, env));
  out.image_png = encode_png(final_image);
  out.image_ref = write_artifact(env, record.id, "stage2.png", out.image_png);

  transcript.feedback = out.feedback;
  transcript.stage2_text = out.text;
  return out;
}

AttackTranscript protect(const ImageRecord& record, const AttackConfig& config,
                         const PipelineEnv& env) {
  AttackTranscript transcript;
  transcript.record_id = record.id;
  transcript.variant_id = config.variant_id();
  transcript.gt_location = record.gt_location;

  try {
    config.validate();
    if (record.gt_location.empty()) {
      raise(ErrorCode::kMissingGroundTruth,
            "record '" + record.id + "' has no ground-truth location");
    }
    const Image source = load_image(record.image_path);
    const std::string query = probe_query_for(config, env);

    if (config.clean_baseline) {
      // Null attack: ship the unmodified pixels and just record how the
      // target does on them.
      const std::vector<std::uint8_t> png = encode_png(source);
      const std::string ref = write_artifact(env, record.id, "final.png", png);
      transcript.stage1_image_ref = ref;
      transcript.final_image_ref = ref;
      const Verdict verdict = probe_target(png, query, config, env,
                                           record.gt_location, GeoLabel{},
                                           &transcript.call_log);
      transcript.stage1_prediction = verdict.predicted;
      transcript.stage1_success = !verdict.matches_gt;
      transcript.outcome = verdict.matches_gt ? Outcome::kFailed
                                              : Outcome::kSucceededStage1;
    } else {
      const StageOneOutput s1 = run_stage1(record, source, config, env, transcript);
      const Verdict v1 = probe_target(s1.image_png, query, config, env,
                                      record.gt_location, s1.target_location,
                                      &transcript.call_log);
      transcript.stage1_prediction = v1.predicted;
      transcript.stage1_success = !v1.matches_gt;

      if (transcript.stage1_success) {
        transcript.outcome = Outcome::kSucceededStage1;
        transcript.final_image_ref = s1.image_ref;
      } else if (config.explanatory_stage && config.max_refinement_rounds > 0) {
        std::string previous_text = s1.text;
        std::vector<std::uint8_t> current_png = s1.image_png;
        transcript.outcome = Outcome::kFailed;
        transcript.final_image_ref = s1.image_ref;
        for (int round = 0; round < config.max_refinement_rounds; ++round) {
          const StageTwoOutput s2 =
              run_stage2(record, source, s1, current_png, previous_text, config,
                         env, transcript);
          const Verdict v2 = probe_target(s2.image_png, query, config, env,
                                          record.gt_location, s1.target_location,
                                          &transcript.call_log);
          transcript.final_prediction = v2.predicted;
          transcript.final_image_ref = s2.image_ref;
          if (!v2.matches_gt) {
            transcript.outcome = Outcome::kSucceededStage2;
            break;
          }
          previous_text = s2.text;
          current_png = s2.image_png;
        }
      } else {
        transcript.outcome = Outcome::kFailed;
        transcript.final_image_ref = s1.image_ref;
      }
    }
  } catch (const Error& e) {
    transcript.error_class = error_code_name(e.code());
    transcript.error_message = e.what();
    transcript.outcome = Outcome::kFailed;
  } catch (const std::exception& e) {
    transcript.error_class = "Unexpected";
    transcript.error_message = e.what();
    transcript.outcome = Outcome::kFailed;
  }

  validate_transcript(transcript, config);
  return transcript;
}

}  // namespace geosta
