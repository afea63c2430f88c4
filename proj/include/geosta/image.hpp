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

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace geosta {

using Rgb = std::array<std::uint8_t, 3>;

/// 8-bit RGB raster, row-major, 3 bytes per pixel. All renderer arithmetic
/// is integer so identical inputs produce identical pixels everywhere.
struct Image {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> rgb;

  bool empty() const { return width <= 0 || height <= 0; }

  static Image solid(int width, int height, Rgb color);

  Rgb pixel(int x, int y) const {
    const std::size_t i = (static_cast<std::size_t>(y) * width + x) * 3;
    return {rgb[i], rgb[i + 1], rgb[i + 2]};
  }

  void set_pixel(int x, int y, Rgb color) {
    const std::size_t i = (static_cast<std::size_t>(y) * width + x) * 3;
    rgb[i] = color[0];
    rgb[i + 1] = color[1];
    rgb[i + 2] = color[2];
  }

  bool operator==(const Image& other) const = default;
};

// PNG is the only supported interchange format: the renderer's
// pixel-preservation guarantee needs a lossless encode/decode path.
// Decoding expands palette/gray/16-bit to RGB8 and drops alpha; encoding is
// pinned to fixed filter and compression settings so output bytes are
// reproducible.
Image decode_png(const std::vector<std::uint8_t>& bytes);  // IoError
std::vector<std::uint8_t> encode_png(const Image& image);

Image load_image(const std::string& path);                 // IoError
void save_image(const Image& image, const std::string& path);

std::vector<std::uint8_t> read_file_bytes(const std::string& path);
void write_file_bytes(const std::string& path, const std::vector<std::uint8_t>& bytes);

Image crop(const Image& image, int x, int y, int width, int height);

}  // namespace geosta
