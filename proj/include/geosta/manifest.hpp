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
#include <vector>

#include "geosta/domain.hpp"

namespace geosta {

/// Dataset manifest: one JSON object per line with fields
/// {id, image_path, gt_country, dataset} plus optional gt_provenance and
/// flag. Image paths are relative to the manifest's directory.
struct Manifest {
  std::vector<ImageRecord> records;
  std::filesystem::path base_dir;
};

Manifest load_manifest(const std::filesystem::path& path);  // IoError, ConfigError
void save_manifest(const Manifest& manifest, const std::filesystem::path& path);

std::string resolve_image_path(const Manifest& manifest, const ImageRecord& record);

// Seeded per-dataset sample of up to `per_dataset` records; selected
// records keep their manifest order so downstream aggregation stays
// deterministic. per_dataset <= 0 returns everything.
std::vector<ImageRecord> sample_records(const Manifest& manifest, int per_dataset,
                                        std::uint64_t seed);

}  // namespace geosta
