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

#include <cstdint>
#include <string>
#include <string_view>

#include "geosta/image.hpp"

namespace geosta::fontdata {

// 1-bit glyph bitmaps for ASCII 0x20..0x7E, baked by tools/gen_font_data.py.
// Bit x of kGlyphRows[c - 0x20][y] is ink at column x of row y.
extern const int kCellWidth;
extern const int kCellHeight;
extern const std::uint32_t kGlyphRows[95][32];

}  // namespace geosta::fontdata

namespace geosta {

// Monospace metrics at a given size (= rendered glyph height in pixels).
int glyph_advance(int font_size_px);
int line_height(int font_size_px);
int text_width(std::string_view line, int font_size_px);

// Maps UTF-8 text onto the embedded glyph set: accents fold to ASCII,
// typographic punctuation to plain equivalents, anything else to '?'.
// Newlines survive; other control characters become spaces.
std::string sanitize_for_render(std::string_view utf8);

// Draws one sanitized line with its top-left corner at (x, y). Pixels
// outside the image are clipped. Downscaling ORs source coverage so thin
// strokes never vanish.
void draw_text_line(Image& image, int x, int y, std::string_view line,
                    int font_size_px, Rgb color);

}  // namespace geosta
