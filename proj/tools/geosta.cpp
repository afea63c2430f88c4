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

// geosta: craft and evaluate typographic geolocation protections.
//
// Subcommands: rank, protect, render, evaluate, replay (= evaluate with the
// cache in replay mode), label-gt. Progress goes to stderr; reports, images
// and transcripts go to files under --out. Exit codes: 0 full success,
// 1 partial record failures, 2 config or usage errors.

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "geosta/error.hpp"
#include "geosta/eval.hpp"
#include "geosta/gateway.hpp"
#include "geosta/image.hpp"
#include "geosta/manifest.hpp"
#include "geosta/pipeline.hpp"
#include "geosta/prompts.hpp"
#include "geosta/run_config.hpp"
#include "geosta/typoext.hpp"

namespace {

using namespace geosta;

constexpr int kExitOk = 0;
constexpr int kExitPartial = 1;
constexpr int kExitUsage = 2;

void log_line(const std::string& line) {
  std::fprintf(stderr, "%s\n", line.c_str());
}

struct CommonArgs {
  std::string config_path;
  std::string manifest_path;
  std::string out_dir = "out";
  std::string cache_dir;
  std::string prompts_dir;
  std::vector<std::string> variants;
  std::vector<std::string> queries;
  std::string judge_mode;
  std::string probe_query;
  bool replay = false;
  bool dry_run = false;
  bool verbose = false;
  int parallelism = 0;
  int sample = -1;
  std::uint64_t seed = 0;
  bool seed_set = false;
};

// Wiring shared by every networked subcommand: config, prompt library,
// cache and gateway. Live mode is validated fail-fast per role.
struct Runtime {
  RunConfig config;
  PromptLibrary prompts;
  std::unique_ptr<ResponseCache> cache;
  std::unique_ptr<HttpTransport> transport;
  std::unique_ptr<Gateway> gateway;
};

Runtime make_runtime(const CommonArgs& args, const std::vector<Role>& roles) {
  Runtime rt;
  rt.config = RunConfig::load(args.config_path);
  if (!args.cache_dir.empty()) rt.config.cache_dir = args.cache_dir;
  if (!args.out_dir.empty()) rt.config.out_dir = args.out_dir;
  if (args.replay) rt.config.replay = true;
  if (args.parallelism > 0) rt.config.parallelism = args.parallelism;
  if (!args.judge_mode.empty()) {
    rt.config.judge_mode = judge_mode_from_string(args.judge_mode);
  }
  if (args.verbose) rt.config.verbose = true;
  if (!args.prompts_dir.empty()) rt.config.prompt_override_dir = args.prompts_dir;
  if (args.sample >= 0) rt.config.sample_per_dataset = args.sample;
  if (args.seed_set) rt.config.sample_seed = args.seed;

  std::vector<Role> live_roles = roles;
  if (rt.config.judge_mode == JudgeMode::kLive) live_roles.push_back(Role::kJudge);
  const bool live = !rt.config.replay && !args.dry_run;
  rt.config.validate(live, live_roles);

  if (rt.config.prompt_override_dir) {
    rt.prompts = PromptLibrary::with_overrides(*rt.config.prompt_override_dir);
  }
  rt.cache = std::make_unique<ResponseCache>(rt.config.cache_dir);
  if (!rt.config.replay) rt.transport = std::make_unique<HttpTransport>();
  Gateway::Options options;
  options.mode = rt.config.replay ? GatewayMode::kReplay : GatewayMode::kLive;
  options.parallelism = rt.config.parallelism;
  options.store_prompt_text = rt.config.verbose;
  rt.gateway = std::make_unique<Gateway>(rt.transport.get(), rt.cache.get(), options);
  return rt;
}

std::vector<AttackConfig> variant_configs(const RunConfig& config,
                                          const std::vector<std::string>& ids) {
  if (ids.empty()) return {config.attack_config};
  std::vector<AttackConfig> configs;
  for (const auto& id : ids) {
    // The ablation switches come from the variant id; everything else
    // (placement, notice, query, rounds) follows the base config.
    const AttackConfig flags = attack_config_for_variant(id);
    AttackConfig c = config.attack_config;
    c.clean_baseline = flags.clean_baseline;
    c.instructional_enhancement = flags.instructional_enhancement;
    c.explanatory_stage = flags.explanatory_stage;
    configs.push_back(c);
  }
  return configs;
}

std::vector<std::string> query_texts(const PromptLibrary& prompts,
                                     const std::vector<std::string>& names) {
  std::vector<std::string> texts;
  for (const auto& name : names) {
    texts.push_back(prompts.render_geo_query(query_variant_from_string(name)));
  }
  return texts;
}

PipelineEnv pipeline_env(Runtime& rt) {
  PipelineEnv env;
  env.prompts = &rt.prompts;
  env.gateway = rt.gateway.get();
  env.render_spec = rt.config.render_spec;
  env.attack = rt.config.attack;
  env.target = rt.config.target;
  env.judge = rt.config.judge;
  env.judge_mode = rt.config.judge_mode;
  env.out_dir = rt.config.out_dir;
  env.verbose = rt.config.verbose;
  return env;
}

int run_rank(const CommonArgs& args, const std::string& image_path,
             const std::string& gt_raw) {
  Runtime rt = make_runtime(args, {Role::kAttack});
  if (args.dry_run) {
    std::printf("plan: 1 image\n  attack '%s': 1 call (location ranking)\n",
                rt.config.attack.model_name.c_str());
    return kExitOk;
  }
  const Image image = load_image(image_path);
  const std::string reply = rt.gateway->chat_with_image(
      rt.config.attack, encode_png(image), rt.prompts.render_location_select());
  const LocationRanking ranking = parse_ranking(reply);
  for (std::size_t i = 0; i < ranking.entries.size(); ++i) {
    std::printf("%zu. %s\n", i + 1, ranking.entries[i].raw.c_str());
  }
  if (!gt_raw.empty()) {
    const GeoLabel gt = normalize_label(gt_raw);
    const GeoLabel target = select_target_location(ranking, gt);
    std::printf("target: %s\n", target.raw.c_str());
  }
  return kExitOk;
}

int run_protect(const CommonArgs& args) {
  Runtime rt = make_runtime(args, {Role::kAttack, Role::kTarget});
  const Manifest manifest = load_manifest(args.manifest_path);
  if (manifest.records.empty()) {
    raise(ErrorCode::kConfigError, "manifest is empty");
  }
  const auto records = sample_records(manifest, rt.config.sample_per_dataset,
                                      rt.config.sample_seed);
  const AttackConfig& config = rt.config.attack_config;

  if (args.dry_run) {
    const int k = config.max_refinement_rounds;
    std::printf("plan: %zu records, variant %s\n", records.size(),
                config.variant_id().c_str());
    std::printf("  attack '%s': <= %zu calls (ranking + refinement)\n",
                rt.config.attack.model_name.c_str(), records.size() * (1 + k));
    std::printf("  target '%s': <= %zu calls (probes + feedback)\n",
                rt.config.target.model_name.c_str(), records.size() * (1 + 2 * k));
    if (rt.config.judge_mode == JudgeMode::kLive) {
      std::printf("  judge '%s': <= %zu calls (2 per probe, x2 on retry)\n",
                  rt.config.judge.model_name.c_str(), records.size() * (1 + k) * 4);
    } else {
      std::printf("  judge: 0 calls (offline canonical comparison)\n");
    }
    return kExitOk;
  }

  PipelineEnv env = pipeline_env(rt);
  if (!args.probe_query.empty()) env.probe_query_override = args.probe_query;

  int errored = 0;
  for (const auto& base : records) {
    ImageRecord record = base;
    record.image_path = resolve_image_path(manifest, base);
    const AttackTranscript transcript = protect(record, config, env);
    save_transcript(transcript, (env.out_dir / record_artifact_dir(record.id) /
                                 "transcript.json")
                                    .string());
    if (transcript.error_class.empty()) {
      log_line("ok   " + record.id + " " + outcome_name(transcript.outcome));
    } else {
      ++errored;
      log_line("fail " + record.id + " " + transcript.error_class + ": " +
               transcript.error_message);
    }
  }
  log_line(std::to_string(records.size() - errored) + "/" +
           std::to_string(records.size()) + " records protected");
  return errored == 0 ? kExitOk : kExitPartial;
}

int run_render(const std::string& image_path, const std::string& text,
               const std::string& text_file, const std::string& out_path,
               const std::string& placement, double margin, int font_size,
               bool notice) {
  std::string overlay = text;
  if (!text_file.empty()) {
    const auto bytes = read_file_bytes(text_file);
    overlay.assign(bytes.begin(), bytes.end());
  }
  RenderSpec spec;
  spec.placement = placement_from_string(placement);
  if (margin > 0) spec.margin_fraction = margin;
  if (font_size > 0) spec.font_size_px = font_size;
  if (notice) spec.notice_prefix = kPlatformNoticePrefix;

  const Image source = load_image(image_path);
  const Image extended = extend_image(source, overlay, spec);
  std::string out = out_path;
  if (out.empty()) {
    const std::filesystem::path p(image_path);
    out = (p.parent_path() / (p.stem().string() + ".extended.png")).string();
  }
  save_image(extended, out);
  log_line("wrote " + out + " (" + std::to_string(extended.width) + "x" +
           std::to_string(extended.height) + ")");
  return kExitOk;
}

int run_evaluate(const CommonArgs& args, const std::string& report_path) {
  Runtime rt = make_runtime(args, {Role::kAttack, Role::kTarget});
  const Manifest manifest = load_manifest(args.manifest_path);
  const auto configs = variant_configs(rt.config, args.variants);
  const auto queries = query_texts(rt.prompts, args.queries);

  const auto records = sample_records(manifest, rt.config.sample_per_dataset,
                                      rt.config.sample_seed);
  if (args.dry_run) {
    const std::size_t r = records.size();
    const std::size_t c = configs.size();
    const std::size_t t = rt.config.eval_targets.size();
    const std::size_t q = queries.empty() ? 1 : queries.size();
    int k = 0;
    for (const auto& config : configs) {
      k = std::max(k, config.max_refinement_rounds);
    }
    std::printf("plan: %zu records x %zu variants x %zu targets x %zu queries\n",
                r, c, t, q);
    std::printf("  craft attack '%s': <= %zu calls\n",
                rt.config.attack.model_name.c_str(), r * c * (1 + k));
    std::printf("  craft target '%s': <= %zu calls\n",
                rt.config.target.model_name.c_str(), r * c * (1 + 2 * k));
    std::printf("  eval probes: %zu calls across %zu target model(s)\n",
                r * c * t * q, t);
    if (rt.config.judge_mode == JudgeMode::kLive) {
      std::printf("  judge '%s': <= %zu calls\n",
                  rt.config.judge.model_name.c_str(),
                  (r * c * (1 + k) + r * c * t * q) * 4);
    } else {
      std::printf("  judge: 0 calls (offline canonical comparison)\n");
    }
    return kExitOk;
  }

  EvalEnv env;
  env.prompts = &rt.prompts;
  env.gateway = rt.gateway.get();
  env.render_spec = rt.config.render_spec;
  env.attack = rt.config.attack;
  env.craft_target = rt.config.target;
  env.eval_targets = rt.config.eval_targets;
  env.judge = rt.config.judge;
  env.judge_mode = rt.config.judge_mode;
  env.out_dir = rt.config.out_dir;
  env.eval_queries = queries;
  env.parallelism = rt.config.parallelism;
  env.sample_per_dataset = rt.config.sample_per_dataset;
  env.sample_seed = rt.config.sample_seed;

  const EvalReport report = run_matrix(manifest, configs, env);
  emit_report(report, report_format_for_path(report_path), report_path);

  std::size_t failures = 0;
  for (const auto& [key, cell] : report.cells) {
    for (const auto& failure : cell.failures) {
      ++failures;
      log_line("fail [" + key.dataset + "/" + key.target_model + "/" +
               key.variant_id + "/" + key.query_variant + "] " +
               failure.record_id + " " + failure.error_class);
    }
  }
  log_line("report written to " + report_path);
  return failures == 0 ? kExitOk : kExitPartial;
}

int run_label_gt(const CommonArgs& args, const std::string& out_manifest,
                 const std::string& labeler_role) {
  const Role role = labeler_role == "target"  ? Role::kTarget
                    : labeler_role == "judge" ? Role::kJudge
                                              : Role::kAttack;
  Runtime rt = make_runtime(args, {role});
  const Manifest manifest = load_manifest(args.manifest_path);
  const ModelEndpoint labeler = rt.config.endpoint_for(role);

  std::size_t missing = 0;
  for (const auto& record : manifest.records) {
    if (record.gt_location.empty()) ++missing;
  }
  if (args.dry_run) {
    std::printf("plan: %zu of %zu records lack ground truth\n  labeler '%s': %zu calls\n",
                missing, manifest.records.size(), labeler.model_name.c_str(), missing);
    return kExitOk;
  }

  const Manifest labeled =
      label_ground_truth(manifest, labeler, *rt.gateway, rt.prompts);
  save_manifest(labeled, out_manifest);

  int flagged = 0;
  for (const auto& record : labeled.records) {
    if (!record.flag.empty()) {
      ++flagged;
      log_line("flag " + record.id + " " + record.flag);
    }
  }
  log_line("labeled manifest written to " + out_manifest);
  return flagged == 0 ? kExitOk : kExitPartial;
}

int classify_error_exit(const Error& e) {
  switch (e.code()) {
    case ErrorCode::kConfigError:
    case ErrorCode::kInvalidSpec:
    case ErrorCode::kIoError:
      return kExitUsage;
    default:
      return kExitPartial;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"GeoSTA: typographic geolocation-privacy protection"};
  app.require_subcommand(1);

  CommonArgs args;
  std::string image_path;
  std::string gt_raw;
  std::string render_text;
  std::string render_text_file;
  std::string render_out;
  std::string render_placement = "top";
  double render_margin = 0.0;
  int render_font_size = 0;
  bool render_notice = false;
  std::string report_path = "report.json";
  std::string out_manifest;
  std::string labeler_role = "attack";

  auto add_common = [&](CLI::App* cmd, bool needs_manifest) {
    cmd->add_option("--config", args.config_path, "run config JSON")->required();
    if (needs_manifest) {
      cmd->add_option("--manifest", args.manifest_path, "dataset manifest (JSONL)")
          ->required();
    }
    cmd->add_option("--cache-dir", args.cache_dir, "response cache directory");
    cmd->add_option("--prompts", args.prompts_dir, "prompt override directory");
    cmd->add_option("--parallelism", args.parallelism, "max in-flight requests");
    cmd->add_flag("--replay", args.replay, "cache-only mode, no network");
    cmd->add_flag("--dry-run", args.dry_run, "print the planned call graph and exit");
    cmd->add_flag("--verbose", args.verbose, "retain raw prompts/responses");
  };

  CLI::App* rank = app.add_subcommand("rank", "rank plausible locations for one image");
  add_common(rank, false);
  rank->add_option("--image", image_path, "input PNG")->required();
  rank->add_option("--gt", gt_raw, "ground truth, to also print the selected target");

  CLI::App* protect_cmd =
      app.add_subcommand("protect", "craft protected images for a manifest");
  add_common(protect_cmd, true);
  protect_cmd->add_option("--out", args.out_dir, "output directory");
  protect_cmd->add_option("--judge", args.judge_mode, "judge mode: live|offline");
  protect_cmd->add_option("--probe-query", args.probe_query,
                          "override the stage-1 success-check wording");
  protect_cmd->add_option("--sample", args.sample, "records per dataset (0 = all)");
  protect_cmd->add_option("--seed", args.seed, "sampling seed")
      ->each([&](const std::string&) { args.seed_set = true; });

  CLI::App* render = app.add_subcommand("render", "extend one image with text (offline)");
  render->add_option("--image", image_path, "input PNG")->required();
  render->add_option("--text", render_text, "overlay text");
  render->add_option("--text-file", render_text_file, "read overlay text from a file");
  render->add_option("--out", render_out, "output PNG (default: <stem>.extended.png)");
  render->add_option("--placement", render_placement, "top|bottom|left|right");
  render->add_option("--margin", render_margin, "margin fraction (default 0.18)");
  render->add_option("--font-size", render_font_size, "fixed font size (default auto)");
  render->add_flag("--notice", render_notice, "prepend the platform notice line");

  auto add_eval_opts = [&](CLI::App* cmd) {
    add_common(cmd, true);
    cmd->add_option("--out", report_path, "report file (.json/.csv/.md)");
    cmd->add_option("--variants", args.variants,
                    "comma-separated: clean,tarloc,tarloc_insenh,tarloc_expsta,full")
        ->delimiter(',');
    cmd->add_option("--queries", args.queries,
                    "comma-separated: default,variant_a,variant_b,variant_c,adversary")
        ->delimiter(',');
    cmd->add_option("--judge", args.judge_mode, "judge mode: live|offline");
    cmd->add_option("--sample", args.sample, "records per dataset (0 = all)");
    cmd->add_option("--seed", args.seed, "sampling seed")
        ->each([&](const std::string&) { args.seed_set = true; });
  };
  CLI::App* evaluate = app.add_subcommand("evaluate", "run the evaluation matrix");
  add_eval_opts(evaluate);
  CLI::App* replay =
      app.add_subcommand("replay", "evaluate strictly from the response cache");
  add_eval_opts(replay);

  CLI::App* label =
      app.add_subcommand("label-gt", "fill missing ground-truth labels with a model");
  add_common(label, true);
  label->add_option("--out", out_manifest, "output manifest path")->required();
  label->add_option("--role", labeler_role, "labeler endpoint: attack|target|judge");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (rank->parsed()) return run_rank(args, image_path, gt_raw);
    if (protect_cmd->parsed()) return run_protect(args);
    if (render->parsed()) {
      return run_render(image_path, render_text, render_text_file, render_out,
                        render_placement, render_margin, render_font_size,
                        render_notice);
    }
    if (evaluate->parsed()) return run_evaluate(args, report_path);
    if (replay->parsed()) {
      args.replay = true;
      return run_evaluate(args, report_path);
    }
    if (label->parsed()) return run_label_gt(args, out_manifest, labeler_role);
  } catch (const Error& e) {
    log_line(std::string("error: ") + e.what());
    if (e.code() == ErrorCode::kConfigError) {
      log_line(run_config_schema_help());
    }
    return classify_error_exit(e);
  } catch (const std::exception& e) {
    log_line(std::string("error: ") + e.what());
    return kExitPartial;
  }
  return kExitUsage;
}
