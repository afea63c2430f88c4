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

#include "geosta/geolabel.hpp"

#include <cctype>
#include <map>

#include "geosta/error.hpp"
#include "geosta/unicode.hpp"

namespace geosta {

namespace {

// Curated country aliases, applied after case/punctuation folding. Keys
// must already be in folded form; values must be normalization fixed points
// (never keys themselves) or idempotence breaks.
const std::vector<std::pair<std::string, std::string>> kAliases = {
    {"usa", "united states"},
    {"us", "united states"},
    {"u s", "united states"},
    {"united states of america", "united states"},
    {"america", "united states"},
    {"united states america", "united states"},
    {"uk", "united kingdom"},
    {"great britain", "united kingdom"},
    {"britain", "united kingdom"},
    {"england", "united kingdom"},
    {"uae", "united arab emirates"},
    {"emirates", "united arab emirates"},
    {"drc", "democratic republic of the congo"},
    {"dr congo", "democratic republic of the congo"},
    {"democratic republic of congo", "democratic republic of the congo"},
    {"congo kinshasa", "democratic republic of the congo"},
    {"congo", "republic of the congo"},
    {"congo brazzaville", "republic of the congo"},
    {"republic of korea", "south korea"},
    {"korea", "south korea"},
    {"rok", "south korea"},
    {"dprk", "north korea"},
    {"democratic peoples republic of korea", "north korea"},
    {"peoples republic of china", "china"},
    {"prc", "china"},
    {"mainland china", "china"},
    {"republic of china", "taiwan"},
    {"chinese taipei", "taiwan"},
    {"russian federation", "russia"},
    {"islamic republic of iran", "iran"},
    {"persia", "iran"},
    {"viet nam", "vietnam"},
    {"lao pdr", "laos"},
    {"lao peoples democratic republic", "laos"},
    {"burma", "myanmar"},
    {"czech republic", "czechia"},
    {"holland", "netherlands"},
    {"swiss confederation", "switzerland"},
    {"deutschland", "germany"},
    {"federal republic of germany", "germany"},
    {"cote divoire", "ivory coast"},
    {"turkiye", "turkey"},
    {"timor leste", "east timor"},
    {"cabo verde", "cape verde"},
    {"swaziland", "eswatini"},
    {"macedonia", "north macedonia"},
    {"fyrom", "north macedonia"},
    {"plurinational state of bolivia", "bolivia"},
    {"bolivarian republic of venezuela", "venezuela"},
    {"united republic of tanzania", "tanzania"},
    {"syrian arab republic", "syria"},
    {"arab republic of egypt", "egypt"},
    {"brunei darussalam", "brunei"},
    {"holy see", "vatican city"},
    {"vatican", "vatican city"},
    {"republic of singapore", "singapore"},
    {"republic of india", "india"},
    {"bharat", "india"},
    {"nippon", "japan"},
    {"aotearoa", "new zealand"},
    {"kingdom of saudi arabia", "saudi arabia"},
    {"ksa", "saudi arabia"},
    {"republic of the philippines", "philippines"},
    {"united mexican states", "mexico"},
    {"ceylon", "sri lanka"},
    {"kampuchea", "cambodia"},
    {"siam", "thailand"},
    {"republic of moldova", "moldova"},
    {"slovak republic", "slovakia"},
    {"kyrgyz republic", "kyrgyzstan"},
    {"bosnia", "bosnia and herzegovina"},
    {"bosnia herzegovina", "bosnia and herzegovina"},
    {"hellas", "greece"},
    {"hellenic republic", "greece"},
    {"commonwealth of australia", "australia"},
    {"french republic", "france"},
    {"argentine republic", "argentina"},
};

const std::map<std::string, std::string>& alias_map() {
  static const std::map<std::string, std::string> m(kAliases.begin(), kAliases.end());
  return m;
}

// Lowercase + accent fold + punctuation strip. Hyphens, underscores and
// slashes separate words; other punctuation is removed outright so
// "U.S.A." folds to "usa". Unknown non-ASCII passes through untouched.
std::string fold(const std::string& input) {
  std::string out;
  out.reserve(input.size());
  std::size_t pos = 0;
  while (pos < input.size()) {
    const std::size_t start = pos;
    const std::uint32_t cp = decode_utf8(input, pos);
    if (cp < 0x80) {
      const char c = static_cast<char>(cp);
      if (std::isalnum(static_cast<unsigned char>(c))) {
        out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
      } else if (c == '-' || c == '_' || c == '/' || std::isspace(static_cast<unsigned char>(c))) {
        out.push_back(' ');
      }
      // remaining ASCII punctuation drops
    } else if (const char* folded = ascii_fold(cp)) {
      for (const char* p = folded; *p; ++p) {
        if (std::isalnum(static_cast<unsigned char>(*p))) {
          out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(*p))));
        } else {
          out.push_back(' ');
        }
      }
    } else if (cp != 0xFFFD) {
      out.append(input, start, pos - start);
    }
  }
  return out;
}

std::string collapse_spaces(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  bool pending_space = false;
  for (char c : s) {
    if (c == ' ') {
      pending_space = !out.empty();
    } else {
      if (pending_space) out.push_back(' ');
      pending_space = false;
      out.push_back(c);
    }
  }
  return out;
}

std::string strip_braces(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    if (c != '{' && c != '}') out.push_back(c);
  }
  return out;
}

}  // namespace

GeoLabel normalize_label(const std::string& raw) {
  const std::string display = trim(strip_braces(raw));
  if (display.empty()) {
    raise(ErrorCode::kEmptyLabel, "label is empty after trimming");
  }

  std::string canon = collapse_spaces(fold(display));
  if (canon.rfind("the ", 0) == 0) {
    canon.erase(0, 4);
  }
  const auto& aliases = alias_map();
  if (auto it = aliases.find(canon); it != aliases.end()) {
    canon = it->second;
  }
  if (canon.empty()) {
    raise(ErrorCode::kEmptyLabel, "label '" + display + "' has no comparable content");
  }
  return GeoLabel{display, canon};
}

bool labels_equal(const GeoLabel& a, const GeoLabel& b) {
  return !a.canonical.empty() && a.canonical == b.canonical;
}

const std::vector<std::pair<std::string, std::string>>& country_alias_table() {
  return kAliases;
}

}  // namespace geosta
