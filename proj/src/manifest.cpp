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

#include "geosta/manifest.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include <nlohmann/json.hpp>

#include "geosta/error.hpp"
#include "geosta/unicode.hpp"

namespace geosta {

using nlohmann::json;

Manifest load_manifest(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) raise(ErrorCode::kIoError, "cannot open manifest '" + path.string() + "'");

  Manifest manifest;
  manifest.base_dir = path.has_parent_path() ? path.parent_path()
                                             : std::filesystem::path(".");
  std::set<std::string> seen_ids;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    json row;
    try {
      row = json::parse(line);
    } catch (const json::exception& e) {
      raise(ErrorCode::kConfigError, "manifest line " + std::to_string(line_no) +
                                         ": " + e.what());
    }
    ImageRecord record;
    try {
      record.id = row.at("id").get<std::string>();
      record.image_path = row.at("image_path").get<std::string>();
      // gt_country may be blank: label_ground_truth fills those in later.
      const auto gt = row.at("gt_country").get<std::string>();
      if (!trim(gt).empty()) record.gt_location = normalize_label(gt);
      record.dataset_tag = row.at("dataset").get<std::string>();
    } catch (const json::exception& e) {
      raise(ErrorCode::kConfigError, "manifest line " + std::to_string(line_no) +
                                         ": " + e.what());
    }
    if (row.contains("gt_provenance")) {
      record.gt_provenance = row["gt_provenance"].get<std::string>();
    }
    if (row.contains("flag")) record.flag = row["flag"].get<std::string>();
    if (record.id.empty() || record.image_path.empty() ||
        record.dataset_tag.empty()) {
      raise(ErrorCode::kConfigError, "manifest line " + std::to_string(line_no) +
                                         ": id, image_path and dataset must be "
                                         "non-empty");
    }
    if (!seen_ids.insert(record.id).second) {
      raise(ErrorCode::kConfigError,
            "manifest line " + std::to_string(line_no) + ": duplicate id '" +
                record.id + "'");
    }
    manifest.records.push_back(std::move(record));
  }
  return manifest;
}

void save_manifest(const Manifest& manifest, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) raise(ErrorCode::kIoError, "cannot open '" + path.string() + "' for writing");
  for (const auto& record : manifest.records) {
    json row{{"id", record.id},
             {"image_path", record.image_path},
             {"gt_country", record.gt_location.raw},
             {"dataset", record.dataset_tag}};
    if (record.gt_provenance != "human") row["gt_provenance"] = record.gt_provenance;
    if (!record.flag.empty()) row["flag"] = record.flag;
    out << row.dump() << '\n';
  }
  if (!out) raise(ErrorCode::kIoError, "failed writing '" + path.string() + "'");
}

std::string resolve_image_path(const Manifest& manifest, const ImageRecord& record) {
  const std::filesystem::path p(record.image_path);
  if (p.is_absolute()) return p.string();
  return (manifest.base_dir / p).string();
}

std::vector<ImageRecord> sample_records(const Manifest& manifest, int per_dataset,
                                        std::uint64_t seed) {
  if (per_dataset <= 0) return manifest.records;

  // Indices per dataset tag, then a seeded shuffle to pick which survive.
  std::map<std::string, std::vector<std::size_t>> by_dataset;
  for (std::size_t i = 0; i < manifest.records.size(); ++i) {
    by_dataset[manifest.records[i].dataset_tag].push_back(i);
  }
  std::set<std::size_t> keep;
  for (auto& [tag, indices] : by_dataset) {
    // FNV-1a over the tag keeps the per-dataset stream stable across builds.
    std::uint64_t tag_hash = 1469598103934665603ull;
    for (unsigned char c : tag) {
      tag_hash = (tag_hash ^ c) * 1099511628211ull;
    }
    std::seed_seq seq{seed, tag_hash};
    std::mt19937_64 rng(seq);
    std::shuffle(indices.begin(), indices.end(), rng);
    const auto take = std::min<std::size_t>(indices.size(),
                                            static_cast<std::size_t>(per_dataset));
    keep.insert(indices.begin(), indices.begin() + static_cast<std::ptrdiff_t>(take));
  }
  std::vector<ImageRecord> out;
  out.reserve(keep.size());
  for (std::size_t i : keep) out.push_back(manifest.records[i]);
  return out;
}

}  // namespace geosta
