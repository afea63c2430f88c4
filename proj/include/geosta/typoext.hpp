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

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "geosta/domain.hpp"
#include "geosta/image.hpp"

namespace geosta {

// Fixed warning prefix rendered ahead of the attack text when enabled, so
// human readers know the margin text is machine-directed padding.
inline constexpr char kPlatformNoticePrefix[] =
    "[Platform Notice: Anti-AI Padding Text (Skippable)]:";

/// Margin-extension parameters. The margin is appended outside the original
/// pixel region; it never overlaps it. `margin_fraction` is relative to the
/// image dimension perpendicular to the strip and auto-grows up to
/// kMaxMarginFraction before the renderer gives up with TextOverflow.
struct RenderSpec {
  Placement placement = Placement::kTop;
  double margin_fraction = 0.18;
  int min_margin_px = 64;
  int font_size_px = 0;  // 0 = auto-fit using the size ladder
  Rgb fg_color{0, 0, 0};
  Rgb bg_color{255, 255, 255};
  int padding_px = 12;
  std::optional<std::string> notice_prefix;

  void validate() const;  // InvalidSpec
};

inline constexpr double kMaxMarginFraction = 0.40;
inline constexpr int kMinFontSizePx = 10;

// Descending font-size ladder used by auto-fit.
std::span<const int> default_font_ladder();

/// Word-wrapped lines at the chosen ladder size. Input paragraphs (split on
/// '\n') wrap independently.
struct TextLayout {
  int font_size_px = 0;
  std::vector<std::string> lines;

  int height_px() const;
};

// Picks the largest ladder size whose greedy word-wrap fits the box; words
// wider than the box hard-break. Throws TextOverflow when even the minimum
// size does not fit.
TextLayout fit_text(const std::string& text, int box_w, int box_h);
TextLayout fit_text(const std::string& text, int box_w, int box_h,
                    std::span<const int> ladder);

// The exact text rendered into the margin: the notice prefix on its own
// line (when set), then the attack text.
std::string compose_margin_text(const std::string& text, const RenderSpec& spec);

// Appends a margin strip on spec.placement and renders `text` into it.
// The sub-rectangle holding the original image is bit-identical to the
// input; output is deterministic in (image dims, text, spec).
Image extend_image(const Image& image, const std::string& text,
                   const RenderSpec& spec);

// Where the original image's top-left corner lands inside the extended
// canvas for a given margin thickness.
std::pair<int, int> original_origin(Placement placement, int margin_px);

// Margin thickness chosen by the last extend_image geometry rules, exposed
// so callers can locate the original region: thickness = extended dimension
// minus original dimension along the perpendicular axis.
int margin_thickness(const Image& original, const Image& extended,
                     Placement placement);

}  // namespace geosta
