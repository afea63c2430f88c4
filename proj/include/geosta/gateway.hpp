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

#include <condition_variable>
#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "geosta/domain.hpp"
#include "geosta/prompts.hpp"

namespace geosta {

struct RetryPolicy {
  int max_attempts = 3;
  int backoff_ms = 500;  // doubles per retry
};

/// Role-bound chat-with-image endpoint. Attack and target may name the same
/// underlying model; they stay distinct roles so transfer runs can decouple
/// them. Secrets are referenced by environment variable name, never stored.
struct ModelEndpoint {
  Role role = Role::kTarget;
  std::string provider = "openai_chat";
  std::string base_url;
  std::string model_name;
  double temperature = 0.0;
  int max_tokens = 1024;
  std::string auth_env;
  int timeout_s = 120;
  RetryPolicy retry;
};

nlohmann::json endpoint_to_json(const ModelEndpoint& endpoint);
ModelEndpoint endpoint_from_json(const nlohmann::json& j, Role role);

/// Content-addressed request identity: any change to the model, sampling
/// temperature, prompt bytes, or exact image bytes yields a different key.
struct CacheKey {
  std::string model_name;
  double temperature = 0.0;
  std::string prompt_digest;
  std::string image_digest;  // empty when the request carries no image

  std::string digest() const;

  static CacheKey for_request(const ModelEndpoint& endpoint,
                              const std::optional<std::vector<std::uint8_t>>& image_png,
                              const std::string& prompt);
};

/// One file per key digest under the cache directory; files carry the key
/// fields, the response, and (optionally) the prompt text. Writes go
/// through a temp file and rename, with a single writer per key.
class ResponseCache {
 public:
  explicit ResponseCache(std::filesystem::path dir);

  std::optional<std::string> read(const CacheKey& key) const;
  void write(const CacheKey& key, const std::string& response,
             const std::optional<std::string>& prompt_text);
  std::filesystem::path path_for(const CacheKey& key) const;
  const std::filesystem::path& dir() const { return dir_; }

 private:
  std::filesystem::path dir_;
  mutable std::mutex mutex_;
};

/// Provider adapter: one attempt of send(image?, text) -> text.
class ChatTransport {
 public:
  virtual ~ChatTransport() = default;
  virtual std::string send(const ModelEndpoint& endpoint,
                           const std::optional<std::vector<std::uint8_t>>& image_png,
                           const std::string& prompt) = 0;
};

/// OpenAI-style chat-completions adapter (JSON over HTTP, image attached as
/// a base64 data URL). Throws NetworkError, RateLimited, MalformedResponse.
class HttpTransport : public ChatTransport {
 public:
  std::string send(const ModelEndpoint& endpoint,
                   const std::optional<std::vector<std::uint8_t>>& image_png,
                   const std::string& prompt) override;
};

struct MockExpectation {
  Role role;
  std::string prompt_contains;  // substring the prompt must carry
  std::string response;
  std::string tag;  // label recorded for call-order assertions
};

struct MockCall {
  Role role;
  std::string tag;
  std::string prompt;
  bool had_image = false;
  std::string image_digest;  // sha256 of the attached png, empty when none
};

/// Scripted backend for offline tests. Expectations are consumed strictly
/// in order; any unexpected call throws MockViolation identifying the
/// offender.
class MockTransport : public ChatTransport {
 public:
  explicit MockTransport(std::vector<MockExpectation> script);

  std::string send(const ModelEndpoint& endpoint,
                   const std::optional<std::vector<std::uint8_t>>& image_png,
                   const std::string& prompt) override;

  const std::vector<MockCall>& calls() const { return calls_; }
  // Throws MockViolation if scripted expectations remain unconsumed.
  void expect_exhausted() const;

 private:
  std::vector<MockExpectation> script_;
  std::size_t next_ = 0;
  std::vector<MockCall> calls_;
  std::mutex mutex_;
};

enum class GatewayMode { kLive, kReplay };

struct GatewayStats {
  std::uint64_t calls = 0;
  std::uint64_t attempts = 0;       // transport attempts including retries
  std::uint64_t cache_hits = 0;
  std::uint64_t network_calls = 0;  // calls that reached the transport
};

/// Front door for all model traffic: read-through response cache, replay
/// (cache-only) mode, retry with exponential backoff, and a global
/// bounded-parallelism limiter shared across roles.
class Gateway {
 public:
  struct Options {
    GatewayMode mode = GatewayMode::kLive;
    int parallelism = 4;
    bool store_prompt_text = false;
    bool sleep_on_retry = true;  // tests disable backoff sleeps
  };

  Gateway(ChatTransport* transport, ResponseCache* cache, Options options);

  // Returns the model's text. Cache hit: returns without touching the
  // transport. Replay mode + miss: CacheMiss. Appends (role, digests) to
  // `log` when given.
  std::string chat_with_image(const ModelEndpoint& endpoint,
                              const std::optional<std::vector<std::uint8_t>>& image_png,
                              const std::string& prompt,
                              std::vector<CallLogEntry>* log = nullptr);

  GatewayStats stats() const;
  GatewayMode mode() const { return options_.mode; }

 private:
  ChatTransport* transport_;  // may be null in replay mode
  ResponseCache* cache_;      // may be null (mock-only tests)
  Options options_;
  mutable std::mutex mutex_;
  std::condition_variable slot_free_;
  int in_flight_ = 0;
  GatewayStats stats_;
};

// --- response parsing ---

// Extracts an ordered country ranking from numbered, bulleted, bracketed or
// comma-separated list shapes, dropping commentary and canonical
// duplicates. Throws UnparseableRanking when no shape matches.
LocationRanking parse_ranking(const std::string& response);

enum class JudgeSignal { kMatch, kNoMatch, kAmbiguous };

// Tolerant token scan: NO_MATCH (any casing/separator) wins over MATCH.
JudgeSignal classify_judge_response(const std::string& response);

// Single-response parse; throws MalformedResponse on ambiguity.
bool parse_judge(const std::string& response);

// Full judge protocol: ask, and on an ambiguous reply re-ask once with a
// stricter closing instruction before giving up with MalformedResponse.
bool judge_match(Gateway& gateway, const PromptLibrary& prompts,
                 const ModelEndpoint& judge, const std::string& predicted,
                 const std::string& reference,
                 std::vector<CallLogEntry>* log = nullptr);

}  // namespace geosta
