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

namespace geosta {

// Decodes one UTF-8 codepoint starting at `pos`; advances `pos` past it.
// Malformed bytes decode as U+FFFD and advance by one byte.
std::uint32_t decode_utf8(std::string_view s, std::size_t& pos);

// ASCII replacement for common Latin accented letters and typographic
// punctuation (curly quotes, dashes, ellipsis). Returns nullptr when the
// codepoint has no mapping.
const char* ascii_fold(std::uint32_t cp);

// Whole-string fold: mapped codepoints are replaced, ASCII passes through,
// anything unmapped keeps its original bytes.
std::string ascii_fold(std::string_view s);

std::string trim(std::string_view s);
std::string to_lower_ascii(std::string_view s);

}  // namespace geosta
