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

#include <cstdlib>

#include "httplib.h"

#include "geosta/error.hpp"

namespace geosta {

using nlohmann::json;

namespace {

std::string base64_encode(const std::vector<std::uint8_t>& data) {
  static constexpr char kAlphabet[] =
      "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789+/";
  std::string out;
  out.reserve((data.size() + 2) / 3 * 4);
  std::size_t i = 0;
  for (; i + 3 <= data.size(); i += 3) {
    const std::uint32_t n = (data[i] << 16) | (data[i + 1] << 8) | data[i + 2];
    out.push_back(kAlphabet[(n >> 18) & 63]);
    out.push_back(kAlphabet[(n >> 12) & 63]);
    out.push_back(kAlphabet[(n >> 6) & 63]);
    out.push_back(kAlphabet[n & 63]);
  }
  if (i + 1 == data.size()) {
    const std::uint32_t n = data[i] << 16;
    out.push_back(kAlphabet[(n >> 18) & 63]);
    out.push_back(kAlphabet[(n >> 12) & 63]);
    out += "==";
  } else if (i + 2 == data.size()) {
    const std::uint32_t n = (data[i] << 16) | (data[i + 1] << 8);
    out.push_back(kAlphabet[(n >> 18) & 63]);
    out.push_back(kAlphabet[(n >> 12) & 63]);
    out.push_back(kAlphabet[(n >> 6) & 63]);
    out.push_back('=');
  }
  return out;
}

// Splits "https://host:port/prefix" into the client origin and path prefix.
std::pair<std::string, std::string> split_base_url(const std::string& base_url) {
  const auto scheme_end = base_url.find("://");
  if (scheme_end == std::string::npos) {
    raise(ErrorCode::kConfigError, "base_url '" + base_url + "' lacks a scheme");
  }
  const auto path_start = base_url.find('/', scheme_end + 3);
  if (path_start == std::string::npos) return {base_url, ""};
  std::string prefix = base_url.substr(path_start);
  while (!prefix.empty() && prefix.back() == '/') prefix.pop_back();
  return {base_url.substr(0, path_start), prefix};
}

// The content string of an OpenAI-style reply; tolerates the segmented-array
// form some gateways return.
std::string extract_content(const json& body) {
  try {
    const json& content = body.at("choices").at(0).at("message").at("content");
    if (content.is_string()) return content.get<std::string>();
    if (content.is_array()) {
      std::string text;
      for (const auto& part : content) {
        if (part.contains("text")) text += part["text"].get<std::string>();
      }
      return text;
    }
  } catch (const json::exception&) {
  }
  raise(ErrorCode::kMalformedResponse,
        "response carries no choices[0].message.content");
}

}  // namespace

std::string HttpTransport::send(
    const ModelEndpoint& endpoint,
    const std::optional<std::vector<std::uint8_t>>& image_png,
    const std::string& prompt) {
  if (endpoint.base_url.empty()) {
    raise(ErrorCode::kConfigError, "endpoint has no base_url");
  }
  const auto [origin, prefix] = split_base_url(endpoint.base_url);

  httplib::Client client(origin);
  client.set_connection_timeout(endpoint.timeout_s, 0);
  client.set_read_timeout(endpoint.timeout_s, 0);
  client.set_write_timeout(endpoint.timeout_s, 0);

  httplib::Headers headers;
  if (!endpoint.auth_env.empty()) {
    const char* token = std::getenv(endpoint.auth_env.c_str());
    if (!token || !*token) {
      raise(ErrorCode::kConfigError,
            "environment variable '" + endpoint.auth_env + "' is not set");
    }
    headers.emplace("Authorization", std::string("Bearer ") + token);
  }

  json content = json::array();
  content.push_back({{"type", "text"}, {"text", prompt}});
  if (image_png) {
    content.push_back(
        {{"type", "image_url"},
         {"image_url",
          {{"url", "data:image/png;base64," + base64_encode(*image_png)}}}});
  }
  const json request{{"model", endpoint.model_name},
                     {"temperature", endpoint.temperature},
                     {"max_tokens", endpoint.max_tokens},
                     {"messages", json::array({json{{"role", "user"},
                                                    {"content", content}}})}};

  auto result = client.Post(prefix + "/chat/completions", headers,
                            request.dump(), "application/json");
  if (!result) {
    raise(ErrorCode::kNetworkError,
          "request to " + origin + " failed: " + httplib::to_string(result.error()));
  }
  if (result->status == 429) {
    raise(ErrorCode::kRateLimited, "model '" + endpoint.model_name + "' rate limited");
  }
  if (result->status < 200 || result->status >= 300) {
    raise(ErrorCode::kNetworkError, "model '" + endpoint.model_name +
                                        "' returned HTTP " +
                                        std::to_string(result->status));
  }
  json body;
  try {
    body = json::parse(result->body);
  } catch (const json::exception& e) {
    raise(ErrorCode::kMalformedResponse, std::string("response is not JSON: ") + e.what());
  }
  return extract_content(body);
}

}  // namespace geosta
