#!/usr/bin/env python3
"""Regenerates src/font_data.cpp from DejaVu Sans Mono Bold.

The renderer needs a deterministic, self-contained glyph set so that margin
text rasterizes byte-identically on every machine. We bake ASCII 0x20-0x7E
into 1-bit bitmaps at a fixed base cell; runtime scaling is pure integer
math. Rerun this script only when changing the base font or cell geometry.

Usage: python3 tools/gen_font_data.py > src/font_data.cpp
"""

import sys

from PIL import Image, ImageDraw, ImageFont

CELL_H = 32
FONT_SIZE = 26
FIRST = 0x20
LAST = 0x7E
THRESHOLD = 96  # coverage above this counts as ink


def find_font() -> str:
    import matplotlib  # bundles the DejaVu family

    import os

    return os.path.join(
        os.path.dirname(matplotlib.__file__),
        "mpl-data", "fonts", "ttf", "DejaVuSansMono-Bold.ttf",
    )


def main() -> None:
    font = ImageFont.truetype(find_font(), FONT_SIZE)
    ascent, descent = font.getmetrics()
    advance = max(int(round(font.getlength(chr(c)))) for c in range(FIRST, LAST + 1))
    cell_w = advance
    y_off = (CELL_H - (ascent + descent)) // 2

    rows_by_char = []
    for code in range(FIRST, LAST + 1):
        img = Image.new("L", (cell_w, CELL_H), 0)
        draw = ImageDraw.Draw(img)
        draw.text((0, y_off), chr(code), font=font, fill=255)
        px = img.load()
        rows = []
        for y in range(CELL_H):
            bits = 0
            for x in range(cell_w):
                if px[x, y] > THRESHOLD:
                    bits |= 1 << x
            rows.append(bits)
        rows_by_char.append(rows)

    out = sys.stdout
    out.write(
        "// Generated by tools/gen_font_data.py. Do not edit by hand.\n"
        "//\n"
        "// Glyph shapes are rasterized from DejaVu Sans Mono Bold\n"
        "// (Bitstream Vera derivative; see https://dejavu-fonts.github.io/License.html).\n"
        "\n"
        "#include \"geosta/font.hpp\"\n"
        "\n"
        "namespace geosta::fontdata {\n"
        "\n"
    )
    out.write(f"const int kCellWidth = {cell_w};\n")
    out.write(f"const int kCellHeight = {CELL_H};\n")
    out.write("\n")
    out.write(f"const std::uint32_t kGlyphRows[{LAST - FIRST + 1}][{CELL_H}] = {{\n")
    for i, rows in enumerate(rows_by_char):
        code = FIRST + i
        label = chr(code) if code != 0x5C else "backslash"
        out.write(f"    {{  // 0x{code:02x} '{label}'\n")
        for j in range(0, CELL_H, 8):
            chunk = ", ".join(f"0x{r:05x}" for r in rows[j:j + 8])
            out.write(f"        {chunk},\n")
        out.write("    },\n")
    out.write("};\n\n}  // namespace geosta::fontdata\n")


if __name__ == "__main__":
    main()
