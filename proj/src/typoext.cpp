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

#include "geosta/typoext.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstring>
#include <sstream>

#include "geosta/error.hpp"
#include "geosta/font.hpp"
#include "geosta/unicode.hpp"

namespace geosta {

namespace {

constexpr std::array<int, 13> kFontLadder = {48, 44, 40, 36, 32, 28,
                                             24, 20, 18, 16, 14, 12, 10};

bool horizontal(Placement p) {
  return p == Placement::kTop || p == Placement::kBottom;
}

std::vector<std::string> split_paragraphs(const std::string& text) {
  std::vector<std::string> out;
  std::string current;
  for (char c : text) {
    if (c == '\n') {
      out.push_back(current);
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  out.push_back(current);
  return out;
}

// Greedy word wrap of one paragraph at a fixed character budget. Words wider
// than the budget hard-break. Returns false when the budget is zero.
bool wrap_paragraph(const std::string& paragraph, int max_chars,
                    std::vector<std::string>& lines) {
  if (max_chars < 1) return false;
  std::istringstream words(paragraph);
  std::string word;
  std::string line;
  while (words >> word) {
    while (static_cast<int>(word.size()) > max_chars) {
      if (!line.empty()) {
        lines.push_back(line);
        line.clear();
      }
      lines.push_back(word.substr(0, max_chars));
      word.erase(0, max_chars);
    }
    if (line.empty()) {
      line = word;
    } else if (static_cast<int>(line.size() + 1 + word.size()) <= max_chars) {
      line += ' ';
      line += word;
    } else {
      lines.push_back(line);
      line = word;
    }
  }
  // Blank paragraphs keep their vertical slot.
  lines.push_back(line);
  return true;
}

std::optional<TextLayout> try_layout(const std::string& text, int box_w,
                                     int box_h, int font_size_px) {
  const int advance = glyph_advance(font_size_px);
  const int max_chars = box_w / advance;
  TextLayout layout;
  layout.font_size_px = font_size_px;
  for (const auto& paragraph : split_paragraphs(text)) {
    if (!wrap_paragraph(paragraph, max_chars, layout.lines)) return std::nullopt;
  }
  if (layout.height_px() > box_h) return std::nullopt;
  return layout;
}

// Usable text box inside a strip of the given thickness.
std::pair<int, int> strip_box(const Image& image, const RenderSpec& spec,
                              int thickness) {
  if (horizontal(spec.placement)) {
    return {image.width - 2 * spec.padding_px, thickness - 2 * spec.padding_px};
  }
  return {thickness - 2 * spec.padding_px, image.height - 2 * spec.padding_px};
}

}  // namespace

void RenderSpec::validate() const {
  if (!(margin_fraction > 0.0) || margin_fraction > kMaxMarginFraction) {
    raise(ErrorCode::kInvalidSpec, "margin_fraction must be in (0, 0.40]");
  }
  if (min_margin_px < 1) {
    raise(ErrorCode::kInvalidSpec, "min_margin_px must be positive");
  }
  if (font_size_px != 0 && font_size_px < kMinFontSizePx) {
    raise(ErrorCode::kInvalidSpec, "font_size_px below the minimum legible size");
  }
  if (padding_px < 0) {
    raise(ErrorCode::kInvalidSpec, "padding_px must be non-negative");
  }
  if (notice_prefix && notice_prefix->empty()) {
    raise(ErrorCode::kInvalidSpec, "notice_prefix must be non-empty when set");
  }
}

std::span<const int> default_font_ladder() {
  return {kFontLadder.data(), kFontLadder.size()};
}

int TextLayout::height_px() const {
  return static_cast<int>(lines.size()) * line_height(font_size_px);
}

TextLayout fit_text(const std::string& text, int box_w, int box_h) {
  return fit_text(text, box_w, box_h, default_font_ladder());
}

TextLayout fit_text(const std::string& text, int box_w, int box_h,
                    std::span<const int> ladder) {
  if (ladder.empty()) raise(ErrorCode::kInvalidSpec, "empty font ladder");
  for (int size : ladder) {
    if (auto layout = try_layout(text, box_w, box_h, size)) return *layout;
  }
  raise(ErrorCode::kTextOverflow,
        "text does not fit a " + std::to_string(box_w) + "x" +
            std::to_string(box_h) + " box at any ladder size");
}

std::string compose_margin_text(const std::string& text, const RenderSpec& spec) {
  if (spec.notice_prefix) return *spec.notice_prefix + "\n" + text;
  return text;
}

std::pair<int, int> original_origin(Placement placement, int margin_px) {
  switch (placement) {
    case Placement::kTop:
      return {0, margin_px};
    case Placement::kLeft:
      return {margin_px, 0};
    case Placement::kBottom:
    case Placement::kRight:
      return {0, 0};
  }
  return {0, 0};
}

int margin_thickness(const Image& original, const Image& extended,
                     Placement placement) {
  const int d = horizontal(placement) ? extended.height - original.height
                                      : extended.width - original.width;
  if (d < 1) raise(ErrorCode::kInvalidSpec, "extended image has no margin strip");
  return d;
}

Image extend_image(const Image& image, const std::string& text,
                   const RenderSpec& spec) {
  spec.validate();
  if (image.empty()) raise(ErrorCode::kInvalidSpec, "cannot extend an empty image");
  if (trim(text).empty()) raise(ErrorCode::kEmptyText, "margin text is empty");

  const std::string rendered = sanitize_for_render(compose_margin_text(text, spec));
  const int perp = horizontal(spec.placement) ? image.height : image.width;

  std::span<const int> ladder = default_font_ladder();
  std::array<int, 1> fixed{};
  if (spec.font_size_px != 0) {
    fixed[0] = spec.font_size_px;
    ladder = {fixed.data(), fixed.size()};
  }

  // The margin auto-grows in fixed steps up to the cap; within each candidate
  // thickness the ladder walks down. First fit wins, keeping output geometry
  // a pure function of the inputs.
  std::vector<double> fractions;
  for (double step : {0.0, 0.06, 0.12, 0.18}) {
    const double f = std::min(spec.margin_fraction + step, kMaxMarginFraction);
    if (fractions.empty() || f > fractions.back()) fractions.push_back(f);
  }

  int thickness = 0;
  std::optional<TextLayout> layout;
  for (double f : fractions) {
    const int t = std::max(spec.min_margin_px,
                           static_cast<int>(std::lround(f * perp)));
    const auto [box_w, box_h] = strip_box(image, spec, t);
    if (box_w < 1 || box_h < 1) continue;
    bool fit = false;
    for (int size : ladder) {
      if (auto l = try_layout(rendered, box_w, box_h, size)) {
        layout = *l;
        fit = true;
        break;
      }
    }
    if (fit) {
      thickness = t;
      break;
    }
  }
  if (!layout) {
    raise(ErrorCode::kTextOverflow,
          "margin text does not fit even at the maximum margin fraction");
  }

  const int out_w =
      horizontal(spec.placement) ? image.width : image.width + thickness;
  const int out_h =
      horizontal(spec.placement) ? image.height + thickness : image.height;
  Image out = Image::solid(out_w, out_h, spec.bg_color);

  const auto [ox, oy] = original_origin(spec.placement, thickness);
  for (int y = 0; y < image.height; ++y) {
    const std::uint8_t* src =
        image.rgb.data() + static_cast<std::size_t>(y) * image.width * 3;
    std::uint8_t* dst =
        out.rgb.data() +
        (static_cast<std::size_t>(oy + y) * out.width + ox) * 3;
    std::memcpy(dst, src, static_cast<std::size_t>(image.width) * 3);
  }

  int strip_x = 0;
  int strip_y = 0;
  if (spec.placement == Placement::kBottom) strip_y = image.height;
  if (spec.placement == Placement::kRight) strip_x = image.width;

  const int lh = line_height(layout->font_size_px);
  int pen_y = strip_y + spec.padding_px;
  for (const auto& line : layout->lines) {
    draw_text_line(out, strip_x + spec.padding_px, pen_y, line,
                   layout->font_size_px, spec.fg_color);
    pen_y += lh;
  }
  return out;
}

}  // namespace geosta
