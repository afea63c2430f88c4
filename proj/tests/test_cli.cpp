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

// End-to-end checks against the installed binary (path in GEOSTA_BIN).
// Everything here must run without touching the network.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <string>

#include "geosta/image.hpp"

using namespace geosta;

namespace {

struct CliResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

std::filesystem::path work_dir() {
  static const std::filesystem::path dir = [] {
    auto d = std::filesystem::temp_directory_path() /
             ("geosta_cli_" + std::to_string(::getpid()));
    std::filesystem::remove_all(d);
    std::filesystem::create_directories(d);
    return d;
  }();
  return dir;
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

CliResult run_cli(const std::string& args) {
  static int serial = 0;
  const char* bin = std::getenv("GEOSTA_BIN");
  REQUIRE_MESSAGE(bin != nullptr, "GEOSTA_BIN must point at the geosta binary");

  const auto out_path = work_dir() / ("cmd_out_" + std::to_string(serial));
  const auto err_path = work_dir() / ("cmd_err_" + std::to_string(serial));
  ++serial;
  const std::string cmd = std::string(bin) + " " + args + " >" +
                          out_path.string() + " 2>" + err_path.string();
  const int status = std::system(cmd.c_str());

  CliResult result;
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  result.out = slurp(out_path);
  result.err = slurp(err_path);
  return result;
}

std::filesystem::path write_source_png(const std::string& name) {
  std::mt19937_64 rng(5150);
  Image image = Image::solid(200, 150, {30, 90, 160});
  for (auto& byte : image.rgb) byte ^= static_cast<std::uint8_t>(rng());
  const auto path = work_dir() / name;
  save_image(image, path.string());
  return path;
}

std::filesystem::path write_file(const std::string& name,
                                 const std::string& body) {
  const auto path = work_dir() / name;
  std::ofstream(path, std::ios::trunc) << body;
  return path;
}

std::filesystem::path write_offline_config(const std::string& name) {
  return write_file(name, R"({
  "attack": {"model": "attack-model"},
  "target": {"model": "target-model"},
  "parallelism": 1
})");
}

std::filesystem::path write_manifest(const std::string& name, int records) {
  std::string body;
  for (int i = 1; i <= records; ++i) {
    body += "{\"id\": \"r" + std::to_string(i) +
            "\", \"image_path\": \"source.png\", \"gt_country\": "
            "\"Singapore\", \"dataset\": \"alpha\"}\n";
  }
  return write_file(name, body);
}

}  // namespace

TEST_CASE("--help exits cleanly and names the subcommands") {
  const CliResult r = run_cli("--help");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("GeoSTA") != std::string::npos);
  for (const char* sub : {"rank", "protect", "render", "evaluate", "replay",
                          "label-gt"}) {
    CAPTURE(sub);
    CHECK(r.out.find(sub) != std::string::npos);
  }
}

TEST_CASE("a bare invocation is a usage error") {
  const CliResult r = run_cli("");
  CHECK(r.exit_code == 2);
  CHECK(r.err.find("subcommand") != std::string::npos);
}

TEST_CASE("missing required options are usage errors") {
  CHECK(run_cli("render").exit_code == 2);               // no --image
  CHECK(run_cli("evaluate --config c.json").exit_code == 2);  // no --manifest
  CHECK(run_cli("render --image x.png --bogus-flag").exit_code == 2);
}

TEST_CASE("render extends an image fully offline") {
  const auto source = write_source_png("source.png");
  const auto out = work_dir() / "out.png";
  const CliResult r =
      run_cli("render --image " + source.string() +
              " --text \"Image taken in Malaysia\" --out " + out.string());
  CHECK(r.exit_code == 0);
  CHECK(r.err.find("wrote") != std::string::npos);
  REQUIRE(std::filesystem::exists(out));
  const Image extended = load_image(out.string());
  CHECK(extended.width == 200);
  CHECK(extended.height == 214);  // 150 + the 64 px minimum margin
}

TEST_CASE("render derives a default output name from the input stem") {
  const auto source = write_source_png("named.png");
  const CliResult r = run_cli("render --image " + source.string() +
                              " --text \"Image taken in Malaysia\"");
  CHECK(r.exit_code == 0);
  CHECK(std::filesystem::exists(work_dir() / "named.extended.png"));
}

TEST_CASE("render on a missing input reports an io usage error") {
  const CliResult r =
      run_cli("render --image " + (work_dir() / "absent.png").string() +
              " --text \"x\"");
  CHECK(r.exit_code == 2);
  CHECK(r.err.find("error:") != std::string::npos);
}

TEST_CASE("a broken config fails fast with the schema summary") {
  const auto config = write_file("broken.json", "{ not json");
  const auto manifest = write_manifest("m.jsonl", 1);
  const CliResult r = run_cli("evaluate --config " + config.string() +
                              " --manifest " + manifest.string());
  CHECK(r.exit_code == 2);
  CHECK(r.err.find("not valid JSON") != std::string::npos);
  CHECK(r.err.find("config schema") != std::string::npos);
}

TEST_CASE("a missing config file is a usage error") {
  const auto manifest = write_manifest("m2.jsonl", 1);
  const CliResult r =
      run_cli("evaluate --config " + (work_dir() / "absent.json").string() +
              " --manifest " + manifest.string());
  CHECK(r.exit_code == 2);
  CHECK(r.err.find("cannot open config") != std::string::npos);
}

TEST_CASE("dry-run prints the planned call graph without any network") {
  const auto config = write_offline_config("dry.json");
  const auto manifest = write_manifest("dry.jsonl", 2);
  const CliResult r = run_cli(
      "evaluate --config " + config.string() + " --manifest " +
      manifest.string() + " --variants clean,full --dry-run");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("plan: 2 records x 2 variants x 1 targets x 1 queries") !=
        std::string::npos);
  CHECK(r.out.find("eval probes: 4 calls") != std::string::npos);
}

TEST_CASE("rank supports dry-run without a readable image") {
  const auto config = write_offline_config("rank.json");
  const CliResult r =
      run_cli("rank --config " + config.string() + " --image nope.png --dry-run");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("location ranking") != std::string::npos);
}

TEST_CASE("replay against a cold cache lists every miss and exits partial") {
  write_source_png("source.png");
  const auto config = write_offline_config("replay.json");
  const auto manifest = write_manifest("replay.jsonl", 1);
  const auto cache = work_dir() / "cold-cache";
  const auto report = work_dir() / "replay-report.json";
  const CliResult r = run_cli(
      "replay --config " + config.string() + " --manifest " +
      manifest.string() + " --cache-dir " + cache.string() + " --out " +
      report.string());
  CHECK(r.exit_code == 1);
  CHECK(r.err.find("CacheMiss") != std::string::npos);
  // The report is still written, with the miss recorded as a failure.
  REQUIRE(std::filesystem::exists(report));
  CHECK(slurp(report).find("CacheMiss") != std::string::npos);
}

TEST_CASE("label-gt requires an output manifest path") {
  const auto config = write_offline_config("label.json");
  const auto manifest = write_manifest("label.jsonl", 1);
  const CliResult r = run_cli("label-gt --config " + config.string() +
                              " --manifest " + manifest.string());
  CHECK(r.exit_code == 2);
}
