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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>
#include <string>
#include <vector>

#include "geosta/error.hpp"
#include "geosta/manifest.hpp"

using namespace geosta;

namespace {

struct TempDir {
  std::filesystem::path path;
  explicit TempDir(const std::string& name)
      : path(std::filesystem::temp_directory_path() / name) {
    std::filesystem::remove_all(path);
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
};

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
}

}  // namespace

TEST_CASE("load_manifest parses jsonl rows with optional fields") {
  TempDir dir("geosta_manifest_load");
  write_text(dir.path / "m.jsonl",
             R"({"id":"a1","image_path":"images/a1.png","gt_country":"Singapore","dataset":"landmark"})"
             "\n"
             "\n"  // blank lines are skipped
             R"({"id":"b2","image_path":"images/b2.png","gt_country":"","dataset":"street","gt_provenance":"model-labeled","flag":"labeler_refused"})"
             "\n");
  const Manifest manifest = load_manifest(dir.path / "m.jsonl");
  REQUIRE(manifest.records.size() == 2);
  CHECK(manifest.base_dir == dir.path);

  const ImageRecord& a = manifest.records[0];
  CHECK(a.id == "a1");
  CHECK(a.image_path == "images/a1.png");
  CHECK(a.gt_location.canonical == "singapore");
  CHECK(a.dataset_tag == "landmark");
  CHECK(a.gt_provenance == "human");
  CHECK(a.flag.empty());

  const ImageRecord& b = manifest.records[1];
  CHECK(b.gt_location.empty());  // blank gt is allowed pending labeling
  CHECK(b.gt_provenance == "model-labeled");
  CHECK(b.flag == "labeler_refused");
}

TEST_CASE("load_manifest reports the offending line") {
  TempDir dir("geosta_manifest_badline");
  write_text(dir.path / "m.jsonl",
             R"({"id":"a1","image_path":"a.png","gt_country":"Peru","dataset":"d"})"
             "\n"
             "{not json\n");
  try {
    load_manifest(dir.path / "m.jsonl");
    FAIL("expected Error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kConfigError);
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
}

TEST_CASE("load_manifest rejects duplicate ids and missing fields") {
  TempDir dir("geosta_manifest_dup");
  write_text(dir.path / "dup.jsonl",
             R"({"id":"a1","image_path":"a.png","gt_country":"Peru","dataset":"d"})"
             "\n"
             R"({"id":"a1","image_path":"b.png","gt_country":"Chile","dataset":"d"})"
             "\n");
  CHECK_THROWS_AS(load_manifest(dir.path / "dup.jsonl"), Error);

  write_text(dir.path / "missing.jsonl", R"({"id":"a1","image_path":"a.png"})" "\n");
  CHECK_THROWS_AS(load_manifest(dir.path / "missing.jsonl"), Error);
}

TEST_CASE("load_manifest raises IoError for a missing file") {
  try {
    load_manifest("/nonexistent/geosta/manifest.jsonl");
    FAIL("expected Error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kIoError);
  }
}

TEST_CASE("save and reload round-trips every field") {
  TempDir dir("geosta_manifest_roundtrip");
  Manifest manifest;
  manifest.base_dir = dir.path;
  ImageRecord human;
  human.id = "r1";
  human.image_path = "img/r1.png";
  human.gt_location = normalize_label("New Zealand");
  human.dataset_tag = "landmark";
  ImageRecord labeled;
  labeled.id = "r2";
  labeled.image_path = "img/r2.png";
  labeled.gt_location = normalize_label("Kenya");
  labeled.dataset_tag = "street";
  labeled.gt_provenance = "model-labeled";
  labeled.flag = "check_me";
  manifest.records = {human, labeled};

  const auto path = dir.path / "out.jsonl";
  save_manifest(manifest, path);
  const Manifest reloaded = load_manifest(path);
  REQUIRE(reloaded.records.size() == 2);
  CHECK(reloaded.records[0].gt_location.canonical == "new zealand");
  CHECK(reloaded.records[0].gt_provenance == "human");
  CHECK(reloaded.records[1].gt_provenance == "model-labeled");
  CHECK(reloaded.records[1].flag == "check_me");
}

TEST_CASE("resolve_image_path anchors relative paths at the manifest") {
  Manifest manifest;
  manifest.base_dir = "/data/run";
  ImageRecord record;
  record.image_path = "images/x.png";
  CHECK(resolve_image_path(manifest, record) == "/data/run/images/x.png");
  record.image_path = "/absolute/x.png";
  CHECK(resolve_image_path(manifest, record) == "/absolute/x.png");
}

TEST_CASE("sample_records caps each dataset and keeps manifest order") {
  Manifest manifest;
  for (int i = 0; i < 20; ++i) {
    ImageRecord record;
    record.id = "a" + std::to_string(i);
    record.image_path = record.id + ".png";
    record.gt_location = normalize_label("Chile");
    record.dataset_tag = (i < 12) ? "alpha" : "beta";
    manifest.records.push_back(record);
  }

  const auto sampled = sample_records(manifest, 5, 77);
  int alpha = 0;
  int beta = 0;
  for (const auto& record : sampled) {
    (record.dataset_tag == "alpha" ? alpha : beta) += 1;
  }
  CHECK(alpha == 5);
  CHECK(beta == 5);

  // Selected records appear in their original manifest order.
  std::vector<std::size_t> positions;
  for (const auto& record : sampled) {
    const auto it = std::find_if(
        manifest.records.begin(), manifest.records.end(),
        [&](const ImageRecord& r) { return r.id == record.id; });
    positions.push_back(
        static_cast<std::size_t>(it - manifest.records.begin()));
  }
  CHECK(std::is_sorted(positions.begin(), positions.end()));
}

TEST_CASE("sampling is deterministic in the seed and sensitive to it") {
  Manifest manifest;
  for (int i = 0; i < 40; ++i) {
    ImageRecord record;
    record.id = "r" + std::to_string(i);
    record.image_path = record.id + ".png";
    record.gt_location = normalize_label("Chile");
    record.dataset_tag = "only";
    manifest.records.push_back(record);
  }
  const auto ids = [](const std::vector<ImageRecord>& records) {
    std::vector<std::string> out;
    for (const auto& r : records) out.push_back(r.id);
    return out;
  };
  CHECK(ids(sample_records(manifest, 10, 1)) ==
        ids(sample_records(manifest, 10, 1)));
  CHECK(ids(sample_records(manifest, 10, 1)) !=
        ids(sample_records(manifest, 10, 2)));
}

TEST_CASE("non-positive sample size returns everything") {
  Manifest manifest;
  for (int i = 0; i < 7; ++i) {
    ImageRecord record;
    record.id = "r" + std::to_string(i);
    record.image_path = record.id + ".png";
    record.gt_location = normalize_label("Chile");
    record.dataset_tag = "d";
    manifest.records.push_back(record);
  }
  CHECK(sample_records(manifest, 0, 9).size() == 7);
  CHECK(sample_records(manifest, -1, 9).size() == 7);
  CHECK(sample_records(manifest, 100, 9).size() == 7);
}

TEST_CASE("per-dataset draws are independent of other datasets") {
  // The seed stream is keyed per dataset tag, so adding a second dataset
  // must not change which records the first one yields.
  Manifest one;
  Manifest two;
  for (int i = 0; i < 15; ++i) {
    ImageRecord record;
    record.id = "a" + std::to_string(i);
    record.image_path = record.id + ".png";
    record.gt_location = normalize_label("Chile");
    record.dataset_tag = "alpha";
    one.records.push_back(record);
    two.records.push_back(record);
  }
  for (int i = 0; i < 15; ++i) {
    ImageRecord record;
    record.id = "b" + std::to_string(i);
    record.image_path = record.id + ".png";
    record.gt_location = normalize_label("Peru");
    record.dataset_tag = "beta";
    two.records.push_back(record);
  }
  const auto from_one = sample_records(one, 4, 5);
  const auto from_two = sample_records(two, 4, 5);
  std::vector<std::string> alpha_ids;
  for (const auto& r : from_two) {
    if (r.dataset_tag == "alpha") alpha_ids.push_back(r.id);
  }
  std::vector<std::string> expected;
  for (const auto& r : from_one) expected.push_back(r.id);
  CHECK(alpha_ids == expected);
}
