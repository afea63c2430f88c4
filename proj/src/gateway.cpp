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

#include "geosta/gateway.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <thread>

#include "geosta/digest.hpp"
#include "geosta/error.hpp"

namespace geosta {

using nlohmann::json;

namespace {

std::string format_temperature(double t) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.6g", t);
  return buffer;
}

}  // namespace

json endpoint_to_json(const ModelEndpoint& endpoint) {
  return json{{"provider", endpoint.provider},
              {"base_url", endpoint.base_url},
              {"model", endpoint.model_name},
              {"temperature", endpoint.temperature},
              {"max_tokens", endpoint.max_tokens},
              {"auth_env", endpoint.auth_env},
              {"timeout_s", endpoint.timeout_s},
              {"max_attempts", endpoint.retry.max_attempts},
              {"backoff_ms", endpoint.retry.backoff_ms}};
}

ModelEndpoint endpoint_from_json(const json& j, Role role) {
  ModelEndpoint endpoint;
  endpoint.role = role;
  try {
    endpoint.model_name = j.at("model").get<std::string>();
    if (j.contains("provider")) endpoint.provider = j["provider"].get<std::string>();
    if (j.contains("base_url")) endpoint.base_url = j["base_url"].get<std::string>();
    if (j.contains("temperature")) endpoint.temperature = j["temperature"].get<double>();
    if (j.contains("max_tokens")) endpoint.max_tokens = j["max_tokens"].get<int>();
    if (j.contains("auth_env")) endpoint.auth_env = j["auth_env"].get<std::string>();
    if (j.contains("timeout_s")) endpoint.timeout_s = j["timeout_s"].get<int>();
    if (j.contains("max_attempts")) {
      endpoint.retry.max_attempts = j["max_attempts"].get<int>();
    }
    if (j.contains("backoff_ms")) endpoint.retry.backoff_ms = j["backoff_ms"].get<int>();
  } catch (const json::exception& e) {
    raise(ErrorCode::kConfigError,
          std::string("bad endpoint config for role ") + role_name(role) + ": " +
              e.what());
  }
  if (endpoint.model_name.empty()) {
    raise(ErrorCode::kConfigError,
          std::string("endpoint for role ") + role_name(role) +
              " needs a model name");
  }
  if (endpoint.retry.max_attempts < 1) {
    raise(ErrorCode::kConfigError, "max_attempts must be at least 1");
  }
  return endpoint;
}

std::string CacheKey::digest() const {
  return sha256_hex(model_name + "\n" + format_temperature(temperature) + "\n" +
                    prompt_digest + "\n" + image_digest);
}

CacheKey CacheKey::for_request(
    const ModelEndpoint& endpoint,
    const std::optional<std::vector<std::uint8_t>>& image_png,
    const std::string& prompt) {
  CacheKey key;
  key.model_name = endpoint.model_name;
  key.temperature = endpoint.temperature;
  key.prompt_digest = sha256_hex(prompt);
  if (image_png) key.image_digest = sha256_hex(*image_png);
  return key;
}

ResponseCache::ResponseCache(std::filesystem::path dir) : dir_(std::move(dir)) {
  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
  if (ec) {
    raise(ErrorCode::kIoError,
          "cannot create cache directory '" + dir_.string() + "': " + ec.message());
  }
}

std::filesystem::path ResponseCache::path_for(const CacheKey& key) const {
  return dir_ / (key.digest() + ".json");
}

std::optional<std::string> ResponseCache::read(const CacheKey& key) const {
  std::lock_guard<std::mutex> lock(mutex_);
  const auto path = path_for(key);
  std::ifstream in(path);
  if (!in) return std::nullopt;
  json entry;
  try {
    in >> entry;
    return entry.at("response").get<std::string>();
  } catch (const json::exception& e) {
    raise(ErrorCode::kIoError,
          "corrupt cache entry '" + path.string() + "': " + e.what());
  }
}

void ResponseCache::write(const CacheKey& key, const std::string& response,
                          const std::optional<std::string>& prompt_text) {
  std::lock_guard<std::mutex> lock(mutex_);
  json entry{{"model", key.model_name},
             {"temperature", key.temperature},
             {"prompt_digest", key.prompt_digest},
             {"image_digest", key.image_digest},
             {"response", response}};
  if (prompt_text) entry["prompt_text"] = *prompt_text;
  const auto path = path_for(key);
  const auto tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) raise(ErrorCode::kIoError, "cannot write cache entry '" + tmp + "'");
    out << entry.dump(2) << '\n';
    if (!out) raise(ErrorCode::kIoError, "failed writing cache entry '" + tmp + "'");
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    raise(ErrorCode::kIoError,
          "cannot finalize cache entry '" + path.string() + "': " + ec.message());
  }
}

MockTransport::MockTransport(std::vector<MockExpectation> script)
    : script_(std::move(script)) {}

std::string MockTransport::send(
    const ModelEndpoint& endpoint,
    const std::optional<std::vector<std::uint8_t>>& image_png,
    const std::string& prompt) {
  std::lock_guard<std::mutex> lock(mutex_);
  if (next_ >= script_.size()) {
    raise(ErrorCode::kMockViolation,
          std::string("unexpected call #") + std::to_string(next_ + 1) +
              " to role " + role_name(endpoint.role) + " (script exhausted)");
  }
  const MockExpectation& expected = script_[next_];
  if (expected.role != endpoint.role) {
    raise(ErrorCode::kMockViolation,
          "call #" + std::to_string(next_ + 1) + " went to role " +
              role_name(endpoint.role) + ", script expects " +
              role_name(expected.role) + " (" + expected.tag + ")");
  }
  if (!expected.prompt_contains.empty() &&
      prompt.find(expected.prompt_contains) == std::string::npos) {
    raise(ErrorCode::kMockViolation,
          "call #" + std::to_string(next_ + 1) + " (" + expected.tag +
              "): prompt lacks expected substring \"" + expected.prompt_contains +
              "\"");
  }
  calls_.push_back(MockCall{endpoint.role, expected.tag, prompt,
                            image_png.has_value(),
                            image_png ? sha256_hex(*image_png) : ""});
  ++next_;
  return expected.response;
}

void MockTransport::expect_exhausted() const {
  if (next_ < script_.size()) {
    raise(ErrorCode::kMockViolation,
          std::to_string(script_.size() - next_) +
              " scripted expectation(s) never consumed, next tag: " +
              script_[next_].tag);
  }
}

Gateway::Gateway(ChatTransport* transport, ResponseCache* cache, Options options)
    : transport_(transport), cache_(cache), options_(options) {
  if (options_.parallelism < 1) {
    raise(ErrorCode::kConfigError, "gateway parallelism must be at least 1");
  }
}

std::string Gateway::chat_with_image(
    const ModelEndpoint& endpoint,
    const std::optional<std::vector<std::uint8_t>>& image_png,
    const std::string& prompt, std::vector<CallLogEntry>* log) {
  const CacheKey key = CacheKey::for_request(endpoint, image_png, prompt);
  {
    std::lock_guard<std::mutex> lock(mutex_);
    ++stats_.calls;
  }

  if (cache_) {
    if (auto cached = cache_->read(key)) {
      {
        std::lock_guard<std::mutex> lock(mutex_);
        ++stats_.cache_hits;
      }
      if (log) {
        log->push_back(
            CallLogEntry{endpoint.role, key.prompt_digest, sha256_hex(*cached)});
      }
      return *cached;
    }
  }
  if (options_.mode == GatewayMode::kReplay) {
    raise(ErrorCode::kCacheMiss, "replay mode has no cached response for model '" +
                                     endpoint.model_name + "' key " + key.digest());
  }
  if (!transport_) {
    raise(ErrorCode::kConfigError, "gateway has no transport configured");
  }

  // Bounded-parallelism slot, held only for the transport round trips.
  {
    std::unique_lock<std::mutex> lock(mutex_);
    slot_free_.wait(lock, [this] { return in_flight_ < options_.parallelism; });
    ++in_flight_;
    ++stats_.network_calls;
  }
  std::string response;
  try {
    const int max_attempts = std::max(1, endpoint.retry.max_attempts);
    for (int attempt = 1;; ++attempt) {
      {
        std::lock_guard<std::mutex> lock(mutex_);
        ++stats_.attempts;
      }
      try {
        response = transport_->send(endpoint, image_png, prompt);
        break;
      } catch (const Error& e) {
        const bool transient = e.code() == ErrorCode::kNetworkError ||
                               e.code() == ErrorCode::kRateLimited;
        if (!transient || attempt >= max_attempts) throw;
        if (options_.sleep_on_retry) {
          const auto delay = std::chrono::milliseconds(
              static_cast<std::int64_t>(endpoint.retry.backoff_ms) << (attempt - 1));
          std::this_thread::sleep_for(delay);
        }
      }
    }
  } catch (...) {
    std::lock_guard<std::mutex> lock(mutex_);
    --in_flight_;
    slot_free_.notify_one();
    throw;
  }
  {
    std::lock_guard<std::mutex> lock(mutex_);
    --in_flight_;
    slot_free_.notify_one();
  }

  if (cache_) {
    cache_->write(key, response,
                  options_.store_prompt_text ? std::optional<std::string>(prompt)
                                             : std::nullopt);
  }
  if (log) {
    log->push_back(
        CallLogEntry{endpoint.role, key.prompt_digest, sha256_hex(response)});
  }
  return response;
}

GatewayStats Gateway::stats() const {
  std::lock_guard<std::mutex> lock(mutex_);
  return stats_;
}

bool judge_match(Gateway& gateway, const PromptLibrary& prompts,
                 const ModelEndpoint& judge, const std::string& predicted,
                 const std::string& reference, std::vector<CallLogEntry>* log) {
  const std::string prompt = prompts.render_judge_prompt(predicted, reference);
  const std::string first = gateway.chat_with_image(judge, std::nullopt, prompt, log);
  JudgeSignal signal = classify_judge_response(first);
  if (signal == JudgeSignal::kAmbiguous) {
    // The stricter retry is a different prompt on purpose: a cache-backed
    // gateway would otherwise hand back the same ambiguous reply.
    const std::string strict =
        prompt + "\nRespond with the single word MATCH or NO_MATCH and nothing else.";
    const std::string second =
        gateway.chat_with_image(judge, std::nullopt, strict, log);
    signal = classify_judge_response(second);
    if (signal == JudgeSignal::kAmbiguous) {
      raise(ErrorCode::kMalformedResponse,
            "judge answered ambiguously twice for predicted '" + predicted + "'");
    }
  }
  return signal == JudgeSignal::kMatch;
}

}  // namespace geosta
