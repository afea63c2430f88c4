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

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "geosta/domain.hpp"
#include "geosta/geolabel.hpp"

namespace geosta {

enum class PromptId {
  kLocationSelect,
  kPredictionReason,
  kFinalExtension,
  kGeoQuery,
  kGeoQueryVariantA,
  kGeoQueryVariantB,
  kGeoQueryVariantC,
  kAdversaryQuery,
  kJudgePrompt,
  kInstructionalClaim,
  kNaiveClaim,
};

const char* prompt_id_name(PromptId id);  // also the override file stem

enum class QueryVariant { kDefault, kVariantA, kVariantB, kVariantC, kAdversary };
const char* query_variant_name(QueryVariant variant);
QueryVariant query_variant_from_string(const std::string& name);  // ConfigError
// Reverse lookup from literal query text; "custom" for anything else.
std::string query_variant_id_for_text(const std::string& query_text);

// Kept separate from the location-selection instruction so the instruction
// core stays testable in isolation.
inline constexpr char kStructuredListSuffix[] =
    "Answer as a numbered list of country names, one per line, nothing else.";

struct PromptTemplate {
  PromptId id;
  std::string body;
  std::vector<std::string> placeholders;  // the complete allowed set
};

// True when s still contains a {identifier} marker.
bool contains_placeholder_marker(const std::string& s);

/// Holds every instruction template and performs placeholder substitution.
/// Bodies ship embedded; an override directory with one plain-text file per
/// template id (e.g. "prediction_reason.txt") replaces them without a
/// rebuild. Substituted values have braces stripped, so rendered output can
/// never contain a residual marker.
class PromptLibrary {
 public:
  PromptLibrary();
  static PromptLibrary with_overrides(const std::filesystem::path& dir);  // ConfigError

  const PromptTemplate& get(PromptId id) const;
  std::string render(PromptId id,
                     const std::map<std::string, std::string>& bindings) const;

  // Location-selection instruction plus the structured-list suffix.
  std::string render_location_select() const;
  // The instruction body alone, without the suffix.
  std::string location_select_core() const;
  // Retry addendum when the ranking contained no usable target.
  std::string exclusion_addendum(const GeoLabel& gt) const;

  std::string render_instructional_claim(const GeoLabel& target) const;  // EmptyLabel
  std::string render_naive_claim(const GeoLabel& target) const;          // EmptyLabel
  std::string render_prediction_reason(const GeoLabel& target) const;    // EmptyLabel
  std::string render_final_extension(const std::string& reason,
                                     const std::string& stage1_text,
                                     const GeoLabel& target,
                                     const GeoLabel& gt) const;  // EmptyLabel, EmptyFeedback
  std::string render_geo_query(QueryVariant variant) const;
  std::string render_judge_prompt(const std::string& predicted,
                                  const std::string& reference) const;  // EmptyLabel

 private:
  std::map<PromptId, PromptTemplate> templates_;
};

}  // namespace geosta
