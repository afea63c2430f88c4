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

#include <string>
#include <utility>
#include <vector>

namespace geosta {

/// A country-level location. `raw` is the display form (braces stripped so
/// it is always safe inside prompt templates); `canonical` is the
/// lowercase, punctuation-free, alias-resolved comparison form.
struct GeoLabel {
  std::string raw;
  std::string canonical;

  bool empty() const { return canonical.empty(); }
  bool operator==(const GeoLabel& other) const = default;
};

// Canonicalizes a country name: trim, case-fold, accent-fold, strip
// punctuation (hyphens become spaces), drop a leading "the", then apply the
// alias table. Throws EmptyLabel when nothing survives.
// Idempotent: normalize_label(x.canonical).canonical == x.canonical.
GeoLabel normalize_label(const std::string& raw);

// True iff both canonical forms are equal. Inputs must be normalized.
bool labels_equal(const GeoLabel& a, const GeoLabel& b);

// (alias, canonical) pairs applied by normalize_label, exposed so tests can
// round-trip the whole table.
const std::vector<std::pair<std::string, std::string>>& country_alias_table();

}  // namespace geosta
