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

#include "geosta/font.hpp"

#include <algorithm>

#include "geosta/unicode.hpp"

namespace geosta {

namespace {

// Whether the source glyph cell has any ink inside [x0, x1) x [y0, y1).
bool cell_box_has_ink(const std::uint32_t* rows, int x0, int x1, int y0, int y1) {
  x0 = std::max(0, x0);
  y0 = std::max(0, y0);
  x1 = std::min(fontdata::kCellWidth, x1);
  y1 = std::min(fontdata::kCellHeight, y1);
  if (x0 >= x1 || y0 >= y1) return false;
  std::uint32_t mask = 0;
  for (int x = x0; x < x1; ++x) mask |= 1u << x;
  for (int y = y0; y < y1; ++y) {
    if (rows[y] & mask) return true;
  }
  return false;
}

}  // namespace

int glyph_advance(int font_size_px) {
  const int w = (font_size_px * fontdata::kCellWidth + fontdata::kCellHeight / 2) /
                fontdata::kCellHeight;
  return std::max(1, w);
}

int line_height(int font_size_px) {
  return font_size_px + std::max(2, font_size_px / 4);
}

int text_width(std::string_view line, int font_size_px) {
  return static_cast<int>(line.size()) * glyph_advance(font_size_px);
}

std::string sanitize_for_render(std::string_view utf8) {
  std::string out;
  out.reserve(utf8.size());
  std::size_t pos = 0;
  while (pos < utf8.size()) {
    const std::uint32_t cp = decode_utf8(utf8, pos);
    if (cp == '\n') {
      out.push_back('\n');
    } else if (cp < 0x20 || cp == 0x7F) {
      out.push_back(' ');
    } else if (cp <= 0x7E) {
      out.push_back(static_cast<char>(cp));
    } else if (const char* folded = ascii_fold(cp)) {
      out.append(folded);
    } else {
      out.push_back('?');  // one glyph per codepoint, whatever its byte count
    }
  }
  return out;
}

void draw_text_line(Image& image, int x, int y, std::string_view line,
                    int font_size_px, Rgb color) {
  if (font_size_px < 1 || image.empty()) return;
  const int advance = glyph_advance(font_size_px);
  const int glyph_w = advance;
  const int glyph_h = font_size_px;
  int pen_x = x;
  for (char c : line) {
    const auto u = static_cast<unsigned char>(c);
    const int index = (u >= 0x20 && u <= 0x7E) ? u - 0x20 : '?' - 0x20;
    const std::uint32_t* rows = fontdata::kGlyphRows[index];
    for (int dy = 0; dy < glyph_h; ++dy) {
      const int py = y + dy;
      if (py < 0 || py >= image.height) continue;
      // Box over the source cell covered by this destination pixel row.
      const int sy0 = dy * fontdata::kCellHeight / glyph_h;
      const int sy1 =
          std::max(sy0 + 1, (dy + 1) * fontdata::kCellHeight / glyph_h);
      for (int dx = 0; dx < glyph_w; ++dx) {
        const int px = pen_x + dx;
        if (px < 0 || px >= image.width) continue;
        const int sx0 = dx * fontdata::kCellWidth / glyph_w;
        const int sx1 =
            std::max(sx0 + 1, (dx + 1) * fontdata::kCellWidth / glyph_w);
        if (cell_box_has_ink(rows, sx0, sx1, sy0, sy1)) {
          image.set_pixel(px, py, color);
        }
      }
    }
    pen_x += advance;
  }
}

}  // namespace geosta
