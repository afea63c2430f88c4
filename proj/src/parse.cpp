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

#include <cctype>
#include <regex>

#include "geosta/error.hpp"
#include "geosta/gateway.hpp"
#include "geosta/unicode.hpp"

namespace geosta {

namespace {

constexpr std::size_t kMaxCandidateLength = 64;

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::string current;
  for (char c : text) {
    if (c == '\n') {
      lines.push_back(current);
      current.clear();
    } else if (c != '\r') {
      current.push_back(c);
    }
  }
  lines.push_back(current);
  return lines;
}

// Cuts parenthetical probabilities, colon-introduced commentary and dash
// asides off one candidate, then strips quotes and trailing punctuation.
std::string clean_candidate(std::string s) {
  for (const char* sep : {" (", " \xE2\x80\x94 ", " \xE2\x80\x93 ", " - ", ": ", "; "}) {
    const auto pos = s.find(sep);
    if (pos != std::string::npos) s.erase(pos);
  }
  if (const auto colon = s.find(':'); colon != std::string::npos) s.erase(colon);
  std::string t = trim(s);
  while (!t.empty() && (t.back() == '.' || t.back() == ',' || t.back() == ';')) {
    t.pop_back();
  }
  auto strip_wrap = [&t](char open, char close) {
    if (t.size() >= 2 && t.front() == open && t.back() == close) {
      t = trim(t.substr(1, t.size() - 2));
    }
  };
  strip_wrap('"', '"');
  strip_wrap('\'', '\'');
  strip_wrap('*', '*');
  return trim(t);
}

void append_candidate(std::vector<GeoLabel>& out, const std::string& raw) {
  const std::string cleaned = clean_candidate(raw);
  if (cleaned.empty() || cleaned.size() > kMaxCandidateLength) return;
  try {
    out.push_back(normalize_label(cleaned));
  } catch (const Error&) {
    // A candidate that normalizes to nothing is commentary, not a location.
  }
}

std::vector<GeoLabel> numbered_candidates(const std::vector<std::string>& lines) {
  static const std::regex pattern(R"(^\s*\d{1,3}[.)\]:]\s*(.+)$)");
  std::vector<GeoLabel> out;
  std::smatch m;
  for (const auto& line : lines) {
    if (std::regex_match(line, m, pattern)) append_candidate(out, m[1].str());
  }
  return out;
}

std::vector<GeoLabel> bulleted_candidates(const std::vector<std::string>& lines) {
  std::vector<GeoLabel> out;
  for (const auto& line : lines) {
    std::string body = trim(line);
    bool is_bullet = false;
    if (!body.empty() && (body[0] == '-' || body[0] == '*' || body[0] == '+')) {
      body = trim(body.substr(1));
      is_bullet = true;
    } else if (body.rfind("\xE2\x80\xA2", 0) == 0) {  // U+2022 bullet
      body = trim(body.substr(3));
      is_bullet = true;
    }
    if (is_bullet && !body.empty()) append_candidate(out, body);
  }
  return out;
}

std::vector<GeoLabel> bracketed_candidates(const std::string& text) {
  const auto open = text.find('[');
  if (open == std::string::npos) return {};
  const auto close = text.find(']', open + 1);
  if (close == std::string::npos) return {};
  std::vector<GeoLabel> out;
  std::string inner = text.substr(open + 1, close - open - 1);
  std::size_t start = 0;
  while (start <= inner.size()) {
    const auto comma = inner.find(',', start);
    const auto end = (comma == std::string::npos) ? inner.size() : comma;
    append_candidate(out, inner.substr(start, end - start));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

std::vector<GeoLabel> comma_candidates(const std::vector<std::string>& lines) {
  // Only a lone comma-separated line is unambiguous enough to accept.
  std::vector<std::string> non_empty;
  for (const auto& line : lines) {
    if (!trim(line).empty()) non_empty.push_back(trim(line));
  }
  if (non_empty.size() != 1 || non_empty[0].find(',') == std::string::npos) {
    return {};
  }
  std::vector<GeoLabel> out;
  const std::string& inner = non_empty[0];
  std::size_t start = 0;
  while (start <= inner.size()) {
    const auto comma = inner.find(',', start);
    const auto end = (comma == std::string::npos) ? inner.size() : comma;
    const std::string token = trim(inner.substr(start, end - start));
    if (token.size() > 40) return {};  // prose, not a list
    append_candidate(out, token);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out.size() >= 2 ? out : std::vector<GeoLabel>{};
}

bool has_word(const std::string& haystack, const std::string& word) {
  std::size_t pos = 0;
  while ((pos = haystack.find(word, pos)) != std::string::npos) {
    const bool left_ok =
        pos == 0 || !std::isalnum(static_cast<unsigned char>(haystack[pos - 1]));
    const std::size_t end = pos + word.size();
    const bool right_ok = end >= haystack.size() ||
                          !std::isalnum(static_cast<unsigned char>(haystack[end]));
    if (left_ok && right_ok) return true;
    ++pos;
  }
  return false;
}

}  // namespace

LocationRanking parse_ranking(const std::string& response) {
  const auto lines = split_lines(response);

  std::vector<GeoLabel> candidates = numbered_candidates(lines);
  if (candidates.empty()) candidates = bulleted_candidates(lines);
  if (candidates.empty()) candidates = bracketed_candidates(response);
  if (candidates.empty()) candidates = comma_candidates(lines);

  if (candidates.empty()) {
    raise(ErrorCode::kUnparseableRanking,
          "no numbered, bulleted, bracketed or comma list found in ranking reply");
  }
  LocationRanking ranking = make_ranking(std::move(candidates));
  if (ranking.empty()) {
    raise(ErrorCode::kUnparseableRanking, "ranking reply contained no usable labels");
  }
  return ranking;
}

JudgeSignal classify_judge_response(const std::string& response) {
  std::string folded = to_lower_ascii(ascii_fold(response));
  for (char& c : folded) {
    if (c == '_' || c == '-') c = ' ';
  }
  // NO_MATCH checks come first: "no match" textually contains "match".
  if (has_word(folded, "no match") || has_word(folded, "nomatch") ||
      has_word(folded, "mismatch")) {
    return JudgeSignal::kNoMatch;
  }
  if (has_word(folded, "match")) return JudgeSignal::kMatch;
  return JudgeSignal::kAmbiguous;
}

bool parse_judge(const std::string& response) {
  switch (classify_judge_response(response)) {
    case JudgeSignal::kMatch:
      return true;
    case JudgeSignal::kNoMatch:
      return false;
    case JudgeSignal::kAmbiguous:
      break;
  }
  raise(ErrorCode::kMalformedResponse,
        "judge reply is neither MATCH nor NO_MATCH: '" + trim(response) + "'");
}

}  // namespace geosta
