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

#include "geosta/run_config.hpp"

#include <cstdlib>
#include <fstream>

#include "geosta/error.hpp"

namespace geosta {

using nlohmann::json;

namespace {

RenderSpec render_spec_from_json(const json& j) {
  RenderSpec spec;
  if (j.contains("placement")) {
    spec.placement = placement_from_string(j.at("placement").get<std::string>());
  }
  if (j.contains("margin_fraction")) {
    spec.margin_fraction = j.at("margin_fraction").get<double>();
  }
  if (j.contains("min_margin_px")) spec.min_margin_px = j.at("min_margin_px").get<int>();
  if (j.contains("font_size_px")) spec.font_size_px = j.at("font_size_px").get<int>();
  if (j.contains("padding_px")) spec.padding_px = j.at("padding_px").get<int>();
  spec.validate();
  return spec;
}

}  // namespace

RunConfig RunConfig::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    raise(ErrorCode::kConfigError, "cannot open config '" + path.string() + "'");
  }
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    raise(ErrorCode::kConfigError,
          "config '" + path.string() + "' is not valid JSON: " + e.what());
  }

  RunConfig config;
  try {
    config.attack = endpoint_from_json(j.at("attack"), Role::kAttack);
    config.target = endpoint_from_json(j.at("target"), Role::kTarget);
    if (j.contains("judge")) {
      config.judge = endpoint_from_json(j["judge"], Role::kJudge);
    } else {
      config.judge = config.target;
      config.judge.role = Role::kJudge;
    }
    if (j.contains("eval_targets")) {
      for (const auto& entry : j["eval_targets"]) {
        config.eval_targets.push_back(endpoint_from_json(entry, Role::kTarget));
      }
    }
    if (config.eval_targets.empty()) config.eval_targets.push_back(config.target);

    if (j.contains("attack_config")) {
      config.attack_config = attack_config_from_json(j["attack_config"]);
    }
    if (j.contains("render")) config.render_spec = render_spec_from_json(j["render"]);

    if (j.contains("cache_dir")) {
      config.cache_dir = j["cache_dir"].get<std::string>();
    }
    if (j.contains("out_dir")) config.out_dir = j["out_dir"].get<std::string>();
    if (j.contains("replay")) config.replay = j["replay"].get<bool>();
    if (j.contains("parallelism")) config.parallelism = j["parallelism"].get<int>();
    if (j.contains("judge_mode")) {
      config.judge_mode = judge_mode_from_string(j["judge_mode"].get<std::string>());
    }
    if (j.contains("verbose")) config.verbose = j["verbose"].get<bool>();
    if (j.contains("prompt_override_dir")) {
      config.prompt_override_dir = j["prompt_override_dir"].get<std::string>();
    }
    if (j.contains("sample_per_dataset")) {
      config.sample_per_dataset = j["sample_per_dataset"].get<int>();
    }
    if (j.contains("sample_seed")) {
      config.sample_seed = j["sample_seed"].get<std::uint64_t>();
    }
  } catch (const json::exception& e) {
    raise(ErrorCode::kConfigError,
          "config '" + path.string() + "': " + e.what() + "\n" +
              run_config_schema_help());
  }
  return config;
}

void RunConfig::validate(bool live, const std::vector<Role>& roles) const {
  attack_config.validate();
  render_spec.validate();
  if (parallelism < 1) {
    raise(ErrorCode::kConfigError, "parallelism must be at least 1");
  }
  if (!live) return;
  for (Role role : roles) {
    std::vector<const ModelEndpoint*> endpoints;
    if (role == Role::kTarget) {
      for (const auto& endpoint : eval_targets) endpoints.push_back(&endpoint);
    }
    endpoints.push_back(&endpoint_for(role));
    for (const ModelEndpoint* endpoint : endpoints) {
      if (endpoint->base_url.empty()) {
        raise(ErrorCode::kConfigError,
              std::string("endpoint for role ") + role_name(role) +
                  " has no base_url (required for live runs)");
      }
      if (endpoint->auth_env.empty()) continue;
      const char* token = std::getenv(endpoint->auth_env.c_str());
      if (!token || !*token) {
        raise(ErrorCode::kConfigError,
              "environment variable '" + endpoint->auth_env + "' (role " +
                  role_name(role) + ") is not set");
      }
    }
  }
}

const ModelEndpoint& RunConfig::endpoint_for(Role role) const {
  switch (role) {
    case Role::kAttack:
      return attack;
    case Role::kTarget:
      return target;
    case Role::kJudge:
      return judge;
  }
  raise(ErrorCode::kConfigError, "unknown role");
}

std::string run_config_schema_help() {
  return R"(config schema (JSON):
  attack / target / judge: endpoint objects
    model        (string, required)  model name
    provider     (string)            only "openai_chat" is implemented
    base_url     (string)            e.g. "https://api.openai.com/v1"
    temperature  (number, default 0)
    max_tokens   (int, default 1024)
    auth_env     (string)            name of env var holding the API key
    timeout_s    (int, default 120)
    max_attempts (int, default 3)    transport retries on 429/network errors
    backoff_ms   (int, default 500)  doubles per retry
  eval_targets: list of endpoint objects (default: [target])
  attack_config:
    clean_baseline / instructional_enhancement / explanatory_stage (bool)
    placement    ("top"|"bottom"|"left"|"right", default "top")
    platform_notice (bool, default false)
    query_text   (string, default "What country was the image taken in?")
    max_refinement_rounds (int, default 1)
  render:
    placement, margin_fraction (default 0.18), min_margin_px (default 64),
    font_size_px (0 = auto), padding_px (default 12)
  cache_dir (default ".geosta-cache"), out_dir (default "out")
  replay (bool), parallelism (int, default 4)
  judge_mode ("live"|"offline", default "offline"), verbose (bool)
  prompt_override_dir (string), sample_per_dataset (int), sample_seed (int))";
}

}  // namespace geosta
