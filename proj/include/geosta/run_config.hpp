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

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "geosta/domain.hpp"
#include "geosta/gateway.hpp"
#include "geosta/pipeline.hpp"
#include "geosta/typoext.hpp"

namespace geosta {

/// Whole-run configuration loaded from one JSON file. Secrets are only ever
/// referenced by environment variable name. Validated fully before any
/// network or file mutation.
struct RunConfig {
  ModelEndpoint attack;
  ModelEndpoint target;
  ModelEndpoint judge;
  std::vector<ModelEndpoint> eval_targets;  // defaults to {target}

  AttackConfig attack_config;
  RenderSpec render_spec;

  std::filesystem::path cache_dir = ".geosta-cache";
  std::filesystem::path out_dir = "out";
  bool replay = false;
  int parallelism = 4;
  JudgeMode judge_mode = JudgeMode::kOffline;
  bool verbose = false;
  std::optional<std::filesystem::path> prompt_override_dir;
  int sample_per_dataset = 0;
  std::uint64_t sample_seed = 0;

  static RunConfig load(const std::filesystem::path& path);  // ConfigError

  // Fail-fast checks. `live` means requests may actually leave the
  // process, which requires resolvable auth for every role in `roles`.
  void validate(bool live, const std::vector<Role>& roles) const;  // ConfigError

  const ModelEndpoint& endpoint_for(Role role) const;
};

// One-line-per-field schema description printed with usage errors.
std::string run_config_schema_help();

}  // namespace geosta
