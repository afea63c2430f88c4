// Generated by tools/gen_font_data.py. Do not edit by hand.
//
// Glyph shapes are rasterized from DejaVu Sans Mono Bold
// (Bitstream Vera derivative; see https://dejavu-fonts.github.io/License.html).

#include "geosta/font.hpp"

namespace geosta::fontdata {

const int kCellWidth = 16;
const int kCellHeight = 32;

const std::uint32_t kGlyphRows[95][32] = {
    {  // 0x20 ' '
        0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000,
        0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000,
        0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000,
        0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000,
    },
    {  // 0x21 '!'
        0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x003c0, 0x003c0,
        0x003c0, 0x003c0, 0x003c0, 0x003c0, 0x003c0, 0x003c0, 0x003c0, 0x001c0,
        0x001c0, 0x001c0, 0x00000, 0x00000, 0x00000, 0x003c0, 0x003c0, 0x003c0,
        0x003c0, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000,
    },
    {  // 0x22 '"'
        0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x01e38, 0x01e38,
        0x01e38, 0x01e38, 0x01e38, 0x01e38, 0x01e38, 0x00000, 0x00000, 0x00000,
        0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000,
        0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000,
    },
    {  // 0x23 '#'
        0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x039c0, 0x039c0,
        0x038e0, 0x038e0, 0x01ce0, 0x0fffe, 0x0fffe, 0x0fffe, 0x00e70, 0x00e70,
        0x00e38, 0x03fff, 0x03fff, 0x03fff, 0x0071c, 0x0071c, 0x0039c, 0x0039c,
        0x0039e, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000,
    },
    {  // 0x24 '$'
        0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00180, 0x00180, 0x00180,
        0x00fe0, 0x01ff8, 0x01ff8, 0x019bc, 0x001bc, 0x001bc, 0x001fc, 0x007f8,
        0x01ff8, 0x01fe0, 0x03f80, 0x03d80, 0x03d80, 0x03d8c, 0x01ffc, 0x01ffc,
        0x007f0, 0x00180, 0x00180, 0x00180, 0x00180, 0x00000, 0x00000, 0x00000,
    },
    {  // 0x25 '%'
        0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x0007c, 0x000fe,
        0x000ee, 0x001c7, 0x001c7, 0x000ee, 0x060fe, 0x0387c, 0x00f00, 0x003c0,
        0x00070, 0x03e1c, 0x07f06, 0x07300, 0x0e380, 0x0e380, 0x07300, 0x07f00,
        0x03e00, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000,
    },
    {  // 0x26 '&'
        0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x007e0, 0x00ff0,
        0x00ff8, 0x00c78, 0x00078, 0x00078, 0x000f8, 0x000f0, 0x001fc, 0x0f3fc,
        0x073ce, 0x0778e, 0x07f0f, 0x07f0f, 0x03e1e, 0x03e3e, 0x03ffe, 0x07ffc,
        0x0fbf0, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000,
    },
    {  // 0x27 '''
        0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x003c0, 0x003c0,
        0x003c0, 0x003c0, 0x003c0, 0x003c0, 0x003c0, 0x00000, 0x00000, 0x00000,
        0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000,
        0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000,
    },
    {  // 0x28 '('
        0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00f00, 0x00700, 0x00780,
        0x00380, 0x003c0, 0x001c0, 0x001c0, 0x001e0, 0x001e0, 0x001e0, 0x001e0,
        0x001e0, 0x001e0, 0x001e0, 0x001e0, 0x001e0, 0x001c0, 0x003c0, 0x003c0,
        0x00380, 0x00780, 0x00700, 0x00f00, 0x00000, 0x00000, 0x00000, 0x00000,
    },
    {  // 0x29 ')'
        0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00070, 0x000e0, 0x000e0,
        0x001e0, 0x001c0, 0x003c0, 0x003c0, 0x00380, 0x00780, 0x00780, 0x00780,
        0x00780, 0x00780, 0x00780, 0x00780, 0x00380, 0x003c0, 0x003c0, 0x001c0,
        0x001e0, 0x000e0, 0x000e0, 0x00070, 0x00000, 0x00000, 0x00000, 0x00000,
    },
    {  // 0x2a '*'
        0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00180, 0x00180,
        0x0118c, 0x03d9c, 0x01ff8, 0x007e0, 0x007e0, 0x01ff8, 0x03d9c, 0x0118c,
        0x00180, 0x00180, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000,
        0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000,
    },
    {  // 0x2b '+'
        0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000,
        0x00000, 0x00000, 0x001c0, 0x001c0, 0x001c0, 0x001c0, 0x001c0, 0x07ffe,
        0x07ffe, 0x07ffe, 0x001c0, 0x001c0, 0x001c0, 0x001c0, 0x001c0, 0x00000,
        0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000,
    },
    {  // 0x2c ','
        0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000,
        0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000,
        0x00000, 0x00000, 0x00000, 0x00000, 0x003c0, 0x003c0, 0x003c0, 0x003c0,
        0x001e0, 0x001e0, 0x000e0, 0x000e0, 0x00000, 0x00000, 0x00000, 0x00000,
    },
    {  // 0x2d '-'
        0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000,
        0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00ff0,
        0x00ff0, 0x00ff0, 0x00ff0, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000,
        0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000,
    },
    {  // 0x2e '.'
        0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000,
        0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000,
        0x00000, 0x00000, 0x00000, 0x00000, 0x003c0, 0x003c0, 0x003c0, 0x003c0,
        0x003c0, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000,
    },
    {  // 0x2f '/'
        0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x03800, 0x03800,
        0x01c00, 0x01c00, 0x00e00, 0x00e00, 0x00700, 0x00700, 0x00380, 0x00380,
        0x001c0, 0x001c0, 0x000e0, 0x000e0, 0x00070, 0x00070, 0x00038, 0x00038,
        0x00038, 0x0001c, 0x0001c, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000,
    },
    {  // 0x30 '0'
        0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x007e0, 0x00ff0,
        0x01ff8, 0x01e7c, 0x03c3c, 0x03c3c, 0x03c3c, 0x03c3c, 0x03d9e, 0x03dde,
        0x03d9e, 0x03c3c, 0x03c3c, 0x03c3c, 0x03c3c, 0x01e7c, 0x01ff8, 0x00ff0,
        0x007e0, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000,
    },
    {  // 0x31 '1'
        0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x003f0, 0x003f8,
        0x003f8, 0x003d8, 0x003c0, 0x003c0, 0x003c0, 0x003c0, 0x003c0, 0x003c0,
        0x003c0, 0x003c0, 0x003c0, 0x003c0, 0x003c0, 0x003c0, 0x07ffc, 0x07ffc,
        0x07ffc, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000,
    },
    {  // 0x32 '2'
        0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x003f8, 0x00ffc,
        0x01ffc, 0x01f0c, 0x03e00, 0x03c00, 0x01e00, 0x01e00, 0x01f00, 0x00f80,
        0x00780, 0x003c0, 0x001e0, 0x000f0, 0x00078, 0x0003c, 0x03ffe, 0x03ffe,
        0x03ffe, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000,
    },
    {  // 0x33 '3'
        0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x007f8, 0x00ffc,
        0x01ffc, 0x01e0c, 0x03c00, 0x01c00, 0x01e00, 0x00fe0, 0x007e0, 0x00fe0,
        0x01e00, 0x03c00, 0x03c00, 0x03c00, 0x03c00, 0x03e0e, 0x01ffe, 0x00ffe,
        0x007f8, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000,
    },
    {  // 0x34 '4'
        0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x01f00, 0x01f80,
        0x01f80, 0x01fc0, 0x01fc0, 0x01ee0, 0x01ef0, 0x01e70, 0x01e38, 0x01e3c,
        0x01e1c, 0x01e0e, 0x07ffe, 0x07ffe, 0x07ffe, 0x01e00, 0x01e00, 0x01e00,
        0x01e00, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000,
    },
    {  // 0x35 '5'
        0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x01ffc, 0x01ffc,
        0x01ffc, 0x0003c, 0x0003c, 0x0003c, 0x0003c, 0x007fc, 0x00ffc, 0x01ffc,
        0x03f0c, 0x03c00, 0x03c00, 0x03c00, 0x03c00, 0x01f0c, 0x01ffc, 0x00ffc,
        0x003f8, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000,
    },
    {  // 0x36 '6'
        0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00fc0, 0x01ff0,
        0x01ff8, 0x01878, 0x0003c, 0x0003c, 0x00fdc, 0x01ffc, 0x03ffc, 0x03e7c,
        0x03c3c, 0x03c3c, 0x0383c, 0x03c3c, 0x03c3c, 0x03e7c, 0x01ff8, 0x01ff0,
        0x007e0, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000,
    },
    {  // 0x37 '7'
        0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x03ffc, 0x03ffc,
        0x03ffc, 0x01e00, 0x01e00, 0x01e00, 0x00f00, 0x00f00, 0x00f80, 0x00780,
        0x00780, 0x003c0, 0x003c0, 0x003e0, 0x001e0, 0x001e0, 0x000f0, 0x000f0,
        0x000f0, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000,
    },
    {  // 0x38 '8'
        0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x007e0, 0x00ff8,
        0x01ff8, 0x01e7c, 0x03c3c, 0x03c3c, 0x01c3c, 0x01e78, 0x00ff8, 0x007f0,
        0x01ff8, 0x03e3c, 0x03c1c, 0x03c1c, 0x03c1c, 0x03e3c, 0x01ffc, 0x01ff8,
        0x007f0, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000,
    },
    {  // 0x39 '9'
        0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x003e0, 0x00ff8,
        0x01ffc, 0x01e3c, 0x03e1c, 0x03c1e, 0x03c1e, 0x03c1e, 0x03e1e, 0x03e3c,
        0x03ffc, 0x03ff8, 0x03df0, 0x03c00, 0x01e00, 0x01f0c, 0x00ffc, 0x007fc,
        0x003f0, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000,
    },
    {  // 0x3a ':'
        0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000,
        0x00000, 0x00000, 0x00000, 0x003c0, 0x003c0, 0x003c0, 0x003c0, 0x003c0,
        0x00000, 0x00000, 0x00000, 0x00000, 0x003c0, 0x003c0, 0x003c0, 0x003c0,
        0x003c0, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000,
    },
    {  // 0x3b ';'
        0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000,
        0x00000, 0x00000, 0x00000, 0x003c0, 0x003c0, 0x003c0, 0x003c0, 0x003c0,
        0x00000, 0x00000, 0x00000, 0x00000, 0x003c0, 0x003c0, 0x003c0, 0x003c0,
        0x001e0, 0x001e0, 0x000e0, 0x000e0, 0x00000, 0x00000, 0x00000, 0x00000,
    },
    {  // 0x3c '<'
        0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000,
        0x00000, 0x00000, 0x06000, 0x07800, 0x07f00, 0x03fc0, 0x00ff8, 0x001fe,
        0x0003e, 0x0003e, 0x001fe, 0x00ff8, 0x03fc0, 0x07f00, 0x07800, 0x06000,
        0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000,
    },
    {  // 0x3d '='
        0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000,
        0x00000, 0x00000, 0x00000, 0x00000, 0x07ffe, 0x07ffe, 0x07ffe, 0x00000,
        0x00000, 0x00000, 0x07ffe, 0x07ffe, 0x07ffe, 0x00000, 0x00000, 0x00000,
        0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000,
    },
    {  // 0x3e '>'
        0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000,
        0x00000, 0x00000, 0x00006, 0x0001e, 0x000fe, 0x003fe, 0x00ff0, 0x03f80,
        0x07e00, 0x07c00, 0x03f80, 0x01ff0, 0x003fc, 0x000fe, 0x0001e, 0x00006,
        0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000,
    },
    {  // 0x3f '?'
        0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x007f0, 0x01ff8,
        0x01ff8, 0x03e18, 0x03c00, 0x01e00, 0x00f00, 0x00780, 0x003c0, 0x003c0,
        0x001c0, 0x001e0, 0x001e0, 0x00000, 0x00000, 0x001e0, 0x001e0, 0x001e0,
        0x001e0, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000,
    },
    {  // 0x40 '@'
        0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00fc0,
        0x01ff0, 0x03c78, 0x0381c, 0x0700e, 0x07f8e, 0x07fc6, 0x079c7, 0x070e7,
        0x070e7, 0x070e7, 0x070e7, 0x070e7, 0x070e7, 0x079c7, 0x07fce, 0x07f8e,
        0x0001c, 0x0003c, 0x03078, 0x07ff0, 0x01fc0, 0x00000, 0x00000, 0x00000,
    },
    {  // 0x41 'A'
        0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x003e0, 0x007e0,
        0x007e0, 0x007f0, 0x007f0, 0x00f70, 0x00f70, 0x00e78, 0x01e78, 0x01e78,
        0x01e38, 0x01ffc, 0x03ffc, 0x03ffc, 0x03c1c, 0x0381e, 0x0781e, 0x0781e,
        0x0780f, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000,
    },
    {  // 0x42 'B'
        0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x007fe, 0x01ffe,
        0x03ffe, 0x03e1e, 0x03c1e, 0x03c1e, 0x03e1e, 0x01ffe, 0x00ffe, 0x01ffe,
        0x03c1e, 0x07c1e, 0x0781e, 0x0781e, 0x0781e, 0x07c1e, 0x03ffe, 0x01ffe,
        0x00ffe, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000,
    },
    {  // 0x43 'C'
        0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x01fc0, 0x03fe0,
        0x03ff0, 0x030f8, 0x02078, 0x0007c, 0x0003c, 0x0003c, 0x0003c, 0x0003c,
        0x0003c, 0x0003c, 0x0003c, 0x0007c, 0x02078, 0x030f8, 0x03ff0, 0x03fe0,
        0x01fc0, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000,
    },
    {  // 0x44 'D'
        0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x003fc, 0x00ffc,
        0x01ffc, 0x01f3c, 0x03e3c, 0x03c3c, 0x03c3c, 0x03c3c, 0x07c3c, 0x07c3c,
        0x07c3c, 0x03c3c, 0x03c3c, 0x03c3c, 0x03e3c, 0x01f3c, 0x01ffc, 0x00ffc,
        0x003fc, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000,
    },
    {  // 0x45 'E'
        0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x03ffc, 0x03ffc,
        0x03ffc, 0x0003c, 0x0003c, 0x0003c, 0x0003c, 0x01ffc, 0x01ffc, 0x01ffc,
        0x0003c, 0x0003c, 0x0003c, 0x0003c, 0x0003c, 0x0003c, 0x03ffc, 0x03ffc,
        0x03ffc, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000,
    },
    {  // 0x46 'F'
        0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x03ffc, 0x03ffc,
        0x03ffc, 0x0003c, 0x0003c, 0x0003c, 0x0003c, 0x03ffc, 0x03ffc, 0x03ffc,
        0x0003c, 0x0003c, 0x0003c, 0x0003c, 0x0003c, 0x0003c, 0x0003c, 0x0003c,
        0x0003c, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000,
    },
    {  // 0x47 'G'
        0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x01fc0, 0x03ff0,
        0x03ff8, 0x030f8, 0x0207c, 0x0003c, 0x0003c, 0x0003e, 0x0003e, 0x03f3e,
        0x03f3e, 0x03f3e, 0x0383c, 0x0383c, 0x0387c, 0x038f8, 0x03ff8, 0x03ff0,
        0x00fc0, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000,
    },
    {  // 0x48 'H'
        0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x03c3c, 0x03c3c,
        0x03c3c, 0x03c3c, 0x03c3c, 0x03c3c, 0x03c3c, 0x03ffc, 0x03ffc, 0x03ffc,
        0x03c3c, 0x03c3c, 0x03c3c, 0x03c3c, 0x03c3c, 0x03c3c, 0x03c3c, 0x03c3c,
        0x03c3c, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000,
    },
    {  // 0x49 'I'
        0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x03ffc, 0x03ffc,
        0x03ffc, 0x003c0, 0x003c0, 0x003c0, 0x003c0, 0x003c0, 0x003c0, 0x003c0,
        0x003c0, 0x003c0, 0x003c0, 0x003c0, 0x003c0, 0x003c0, 0x03ffc, 0x03ffc,
        0x03ffc, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000,
    },
    {  // 0x4a 'J'
        0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x01ff0, 0x01ff0,
        0x01ff0, 0x01e00, 0x01e00, 0x01e00, 0x01e00, 0x01e00, 0x01e00, 0x01e00,
        0x01e00, 0x01e00, 0x01e00, 0x01e00, 0x01e02, 0x01f0e, 0x00ffe, 0x00ffe,
        0x003f8, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000,
    },
    {  // 0x4b 'K'
        0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x0781e, 0x03c1e,
        0x01e1e, 0x01f1e, 0x00f9e, 0x0079e, 0x003de, 0x003fe, 0x003fe, 0x007fe,
        0x007fe, 0x00fbe, 0x00f1e, 0x01f1e, 0x01e1e, 0x03e1e, 0x03c1e, 0x07c1e,
        0x0781e, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000,
    },
    {  // 0x4c 'L'
        0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00078, 0x00078,
        0x00078, 0x00078, 0x00078, 0x00078, 0x00078, 0x00078, 0x00078, 0x00078,
        0x00078, 0x00078, 0x00078, 0x00078, 0x00078, 0x00078, 0x07ff8, 0x07ff8,
        0x07ff8, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000,
    },
    {  // 0x4d 'M'
        0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x07c3e, 0x07c3e,
        0x07e3e, 0x07e7e, 0x07e7e, 0x07f7e, 0x07f6e, 0x07fee, 0x07bee, 0x07bce,
        0x07bce, 0x07bce, 0x0780e, 0x0780e, 0x0780e, 0x0780e, 0x0780e, 0x0780e,
        0x0780e, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000,
    },
    {  // 0x4e 'N'
        0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x0383e, 0x0383e,
        0x0387e, 0x0387e, 0x0387e, 0x038fe, 0x038fe, 0x039de, 0x039de, 0x039de,
        0x03b9e, 0x03b9e, 0x03f1e, 0x03f1e, 0x03f1e, 0x03e1e, 0x03e1e, 0x03e1e,
        0x03c1e, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000,
    },
    {  // 0x4f 'O'
        0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x007e0, 0x00ff0,
        0x01ff8, 0x03e7c, 0x03c3c, 0x03c3e, 0x03c1e, 0x07c1e, 0x07c1e, 0x07c1e,
        0x07c1e, 0x07c1e, 0x03c1e, 0x03c3e, 0x03c3c, 0x03e7c, 0x01ff8, 0x00ff0,
        0x007e0, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000,
    },
    {  // 0x50 'P'
        0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x007fc, 0x01ffc,
        0x03ffc, 0x03e3c, 0x07c3c, 0x07c3c, 0x07c3c, 0x07c3c, 0x03e3c, 0x03ffc,
        0x01ffc, 0x007fc, 0x0003c, 0x0003c, 0x0003c, 0x0003c, 0x0003c, 0x0003c,
        0x0003c, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000,
    },
    {  // 0x51 'Q'
        0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x007e0, 0x00ff0,
        0x01ff8, 0x03e7c, 0x03c3c, 0x03c3e, 0x03c1e, 0x07c1e, 0x07c1e, 0x07c1e,
        0x07c1e, 0x07c1e, 0x03c1e, 0x03c3e, 0x03c3c, 0x03e7c, 0x01ff8, 0x00ff0,
        0x00fe0, 0x01e00, 0x01c00, 0x00800, 0x00000, 0x00000, 0x00000, 0x00000,
    },
    {  // 0x52 'R'
        0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x007fc, 0x01ffc,
        0x01ffc, 0x03e3c, 0x03c3c, 0x03c3c, 0x03c3c, 0x03e3c, 0x01ffc, 0x007fc,
        0x00ffc, 0x00f3c, 0x01f3c, 0x01e3c, 0x03e3c, 0x03c3c, 0x07c3c, 0x0783c,
        0x0f83c, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000,
    },
    {  // 0x53 'S'
        0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00fe0, 0x01ff8,
        0x01ffc, 0x01c3c, 0x0103c, 0x0003c, 0x0003c, 0x000fc, 0x007f8, 0x00ff0,
        0x01fc0, 0x03f00, 0x03c00, 0x03c00, 0x03c04, 0x03e1c, 0x01ffc, 0x01ffc,
        0x007f8, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000,
    },
    {  // 0x54 'T'
        0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x07ffe, 0x07ffe,
        0x07ffe, 0x003c0, 0x003c0, 0x003c0, 0x003c0, 0x003c0, 0x003c0, 0x003c0,
        0x003c0, 0x003c0, 0x003c0, 0x003c0, 0x003c0, 0x003c0, 0x003c0, 0x003c0,
        0x003c0, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000,
    },
    {  // 0x55 'U'
        0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x03c1e, 0x03c1e,
        0x03c1e, 0x03c1e, 0x03c1e, 0x03c1e, 0x03c1e, 0x03c1e, 0x03c1e, 0x03c1e,
        0x03c1e, 0x03c1e, 0x03c1e, 0x03c1e, 0x03c3e, 0x03e3c, 0x01ffc, 0x01ff8,
        0x007f0, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000,
    },
    {  // 0x56 'V'
        0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x0781e, 0x0781e,
        0x0381e, 0x03c1e, 0x03c3c, 0x03c3c, 0x03c3c, 0x01e3c, 0x01e38, 0x01e78,
        0x01e78, 0x00e78, 0x00f70, 0x00f70, 0x00ff0, 0x007f0, 0x007e0, 0x007e0,
        0x007e0, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000,
    },
    {  // 0x57 'W'
        0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x0f007, 0x0f00f,
        0x0700f, 0x0700f, 0x0700f, 0x073ce, 0x073ce, 0x073ce, 0x073ce, 0x073ee,
        0x07fee, 0x03f7e, 0x03f7e, 0x03e7c, 0x03e7c, 0x03e7c, 0x03e3c, 0x03c3c,
        0x03c3c, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000,
    },
    {  // 0x58 'X'
        0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x0781e, 0x03c1e,
        0x03c3c, 0x01e3c, 0x01e78, 0x00ff0, 0x00ff0, 0x007e0, 0x003e0, 0x003c0,
        0x007e0, 0x007e0, 0x00ff0, 0x00f78, 0x01e78, 0x01e3c, 0x03c3c, 0x07c1e,
        0x0781e, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000,
    },
    {  // 0x59 'Y'
        0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x0781f, 0x0781e,
        0x03c1e, 0x03c3c, 0x01e3c, 0x01e78, 0x00f78, 0x00ff0, 0x007f0, 0x007e0,
        0x003e0, 0x003c0, 0x003c0, 0x003c0, 0x003c0, 0x003c0, 0x003c0, 0x003c0,
        0x003c0, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000,
    },
    {  // 0x5a 'Z'
        0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x07ffc, 0x07ffc,
        0x07ffc, 0x03c00, 0x03e00, 0x01f00, 0x00f00, 0x00f80, 0x007c0, 0x003c0,
        0x003e0, 0x001f0, 0x000f0, 0x000f8, 0x0007c, 0x0003c, 0x07ffe, 0x07ffe,
        0x07ffe, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000,
    },
    {  // 0x5b '['
        0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00fe0, 0x00fe0, 0x001e0,
        0x001e0, 0x001e0, 0x001e0, 0x001e0, 0x001e0, 0x001e0, 0x001e0, 0x001e0,
        0x001e0, 0x001e0, 0x001e0, 0x001e0, 0x001e0, 0x001e0, 0x001e0, 0x001e0,
        0x001e0, 0x001e0, 0x00fe0, 0x00fe0, 0x00000, 0x00000, 0x00000, 0x00000,
    },
    {  // 0x5c 'backslash'
        0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x0001c, 0x0001c,
        0x0003c, 0x00038, 0x00038, 0x00070, 0x00070, 0x000e0, 0x000e0, 0x001c0,
        0x001c0, 0x00380, 0x00380, 0x00700, 0x00700, 0x00e00, 0x00e00, 0x01c00,
        0x01c00, 0x03800, 0x03800, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000,
    },
    {  // 0x5d ']'
        0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x003f0, 0x003f0, 0x00380,
        0x00380, 0x00380, 0x00380, 0x00380, 0x00380, 0x00380, 0x00380, 0x00380,
        0x00380, 0x00380, 0x00380, 0x00380, 0x00380, 0x00380, 0x00380, 0x00380,
        0x00380, 0x00380, 0x003f0, 0x003f0, 0x00000, 0x00000, 0x00000, 0x00000,
    },
    {  // 0x5e '^'
        0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x003c0, 0x007e0,
        0x007f0, 0x00ff8, 0x01e78, 0x03c3c, 0x0780e, 0x00000, 0x00000, 0x00000,
        0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000,
        0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000,
    },
    {  // 0x5f '_'
        0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000,
        0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000,
        0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000,
        0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x0ffff, 0x0ffff, 0x00000,
    },
    {  // 0x60 '`'
        0x00000, 0x00000, 0x00000, 0x00000, 0x00078, 0x00070, 0x000e0, 0x001c0,
        0x00180, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000,
        0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000,
        0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000,
    },
    {  // 0x61 'a'
        0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000,
        0x00000, 0x00000, 0x00000, 0x007f0, 0x01ffc, 0x01ffc, 0x03c18, 0x03c00,
        0x03ff0, 0x03ffc, 0x03ffc, 0x03c3e, 0x03c1e, 0x03e3e, 0x03ffe, 0x03ffc,
        0x03df8, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000,
    },
    {  // 0x62 'b'
        0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x0003c, 0x0003c, 0x0003c,
        0x0003c, 0x0003c, 0x0003c, 0x00fbc, 0x01ffc, 0x03ffc, 0x03e7c, 0x03c3c,
        0x0783c, 0x0783c, 0x0783c, 0x0783c, 0x03c3c, 0x03e7c, 0x03ffc, 0x01ffc,
        0x00fbc, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000,
    },
    {  // 0x63 'c'
        0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000,
        0x00000, 0x00000, 0x00000, 0x01fc0, 0x03ff0, 0x03ff8, 0x030f8, 0x0007c,
        0x0003c, 0x0003c, 0x0003c, 0x0003c, 0x0007c, 0x030f8, 0x03ff8, 0x03ff0,
        0x00fc0, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000,
    },
    {  // 0x64 'd'
        0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x03c00, 0x03c00, 0x03c00,
        0x03c00, 0x03c00, 0x03c00, 0x03cf0, 0x03ff8, 0x03ffc, 0x03e3c, 0x03e1e,
        0x03c1e, 0x03c1e, 0x03c1e, 0x03c1e, 0x03e1e, 0x03e3c, 0x03ffc, 0x03ff8,
        0x03cf0, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000,
    },
    {  // 0x65 'e'
        0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000,
        0x00000, 0x00000, 0x00000, 0x007e0, 0x00ff8, 0x01ffc, 0x03e7c, 0x03c3e,
        0x0781e, 0x07ffe, 0x07ffe, 0x07ffe, 0x0001e, 0x0303c, 0x03ffc, 0x03ff8,
        0x01fe0, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000,
    },
    {  // 0x66 'f'
        0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x03f80, 0x03fc0, 0x03fc0,
        0x003c0, 0x003c0, 0x001c0, 0x03ffc, 0x03ffc, 0x03ffc, 0x001c0, 0x001c0,
        0x001c0, 0x001c0, 0x001c0, 0x001c0, 0x001c0, 0x001c0, 0x001c0, 0x001c0,
        0x001c0, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000,
    },
    {  // 0x67 'g'
        0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000,
        0x00000, 0x00000, 0x00000, 0x03df0, 0x03ff8, 0x03ffc, 0x03e3c, 0x03c3e,
        0x03c1e, 0x03c1e, 0x03c1e, 0x03c1e, 0x03c3e, 0x03e3c, 0x03ffc, 0x03ff8,
        0x03df0, 0x03c00, 0x03e08, 0x01ff8, 0x01ff8, 0x007f0, 0x00000, 0x00000,
    },
    {  // 0x68 'h'
        0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x0003c, 0x0003c, 0x0003c,
        0x0003c, 0x0003c, 0x0003c, 0x00fbc, 0x01ffc, 0x01ffc, 0x03e7c, 0x03c3c,
        0x03c3c, 0x03c3c, 0x03c3c, 0x03c3c, 0x03c3c, 0x03c3c, 0x03c3c, 0x03c3c,
        0x03c3c, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000,
    },
    {  // 0x69 'i'
        0x00000, 0x00000, 0x00000, 0x00000, 0x003c0, 0x003c0, 0x003c0, 0x003c0,
        0x00000, 0x00000, 0x00000, 0x003f8, 0x003f8, 0x003f8, 0x003c0, 0x003c0,
        0x003c0, 0x003c0, 0x003c0, 0x003c0, 0x003c0, 0x003c0, 0x07ffc, 0x07ffc,
        0x07ffc, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000,
    },
    {  // 0x6a 'j'
        0x00000, 0x00000, 0x00000, 0x00000, 0x00780, 0x00780, 0x00780, 0x00780,
        0x00000, 0x00000, 0x00000, 0x007f8, 0x007f8, 0x007f8, 0x00780, 0x00780,
        0x00780, 0x00780, 0x00780, 0x00780, 0x00780, 0x00780, 0x00780, 0x00780,
        0x00780, 0x00780, 0x007c0, 0x003fc, 0x003fc, 0x001fc, 0x00000, 0x00000,
    },
    {  // 0x6b 'k'
        0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x0003c, 0x0003c, 0x0003c,
        0x0003c, 0x0003c, 0x0003c, 0x07c3c, 0x01e3c, 0x00f3c, 0x007bc, 0x003fc,
        0x003fc, 0x003fc, 0x007fc, 0x00f3c, 0x00f3c, 0x01e3c, 0x03e3c, 0x03c3c,
        0x0783c, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000,
    },
    {  // 0x6c 'l'
        0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x001fe, 0x001fe, 0x001fe,
        0x001e0, 0x001e0, 0x001e0, 0x001e0, 0x001e0, 0x001e0, 0x001e0, 0x001e0,
        0x001e0, 0x001e0, 0x001e0, 0x001e0, 0x001e0, 0x003e0, 0x03fe0, 0x03fc0,
        0x03f80, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000,
    },
    {  // 0x6d 'm'
        0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000,
        0x00000, 0x00000, 0x00000, 0x01cee, 0x03ffe, 0x03ffe, 0x07bde, 0x07bce,
        0x079ce, 0x079ce, 0x079ce, 0x079ce, 0x079ce, 0x079ce, 0x079ce, 0x079ce,
        0x079ce, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000,
    },
    {  // 0x6e 'n'
        0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000,
        0x00000, 0x00000, 0x00000, 0x00fbc, 0x01ffc, 0x01ffc, 0x03e7c, 0x03c3c,
        0x03c3c, 0x03c3c, 0x03c3c, 0x03c3c, 0x03c3c, 0x03c3c, 0x03c3c, 0x03c3c,
        0x03c3c, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000,
    },
    {  // 0x6f 'o'
        0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000,
        0x00000, 0x00000, 0x00000, 0x007e0, 0x00ff8, 0x01ffc, 0x03e7c, 0x03c3e,
        0x03c1e, 0x0381e, 0x0381e, 0x03c1e, 0x03c3e, 0x03e3c, 0x01ffc, 0x00ff8,
        0x007e0, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000,
    },
    {  // 0x70 'p'
        0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000,
        0x00000, 0x00000, 0x00000, 0x00fbc, 0x01ffc, 0x03ffc, 0x03e7c, 0x03c3c,
        0x0783c, 0x0783c, 0x0783c, 0x0783c, 0x03c3c, 0x03e7c, 0x03ffc, 0x01ffc,
        0x00fbc, 0x0003c, 0x0003c, 0x0003c, 0x0003c, 0x0003c, 0x00000, 0x00000,
    },
    {  // 0x71 'q'
        0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000,
        0x00000, 0x00000, 0x00000, 0x03cf0, 0x03ff8, 0x03ffc, 0x03e3c, 0x03e1e,
        0x03c1e, 0x03c1e, 0x03c1e, 0x03c1e, 0x03e1e, 0x03e3c, 0x03ffc, 0x03ff8,
        0x03cf0, 0x03c00, 0x03c00, 0x03c00, 0x03c00, 0x03c00, 0x00000, 0x00000,
    },
    {  // 0x72 'r'
        0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000,
        0x00000, 0x00000, 0x00000, 0x03ef0, 0x07ff0, 0x07ff0, 0x063f0, 0x000f0,
        0x000f0, 0x000f0, 0x000f0, 0x000f0, 0x000f0, 0x000f0, 0x000f0, 0x000f0,
        0x000f0, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000,
    },
    {  // 0x73 's'
        0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000,
        0x00000, 0x00000, 0x00000, 0x007e0, 0x01ff8, 0x01ffc, 0x0183c, 0x0003c,
        0x001fc, 0x00ff8, 0x01ff0, 0x01f00, 0x03c00, 0x03e0c, 0x01ffc, 0x01ffc,
        0x007f0, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000,
    },
    {  // 0x74 't'
        0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x001e0,
        0x001e0, 0x001e0, 0x001e0, 0x03ffe, 0x03ffe, 0x03ffe, 0x001e0, 0x001e0,
        0x001e0, 0x001e0, 0x001e0, 0x001e0, 0x001e0, 0x001e0, 0x03fe0, 0x03fc0,
        0x03f80, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000,
    },
    {  // 0x75 'u'
        0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000,
        0x00000, 0x00000, 0x00000, 0x03c3c, 0x03c3c, 0x03c3c, 0x03c3c, 0x03c3c,
        0x03c3c, 0x03c3c, 0x03c3c, 0x03c3c, 0x03e3c, 0x03e7c, 0x03ffc, 0x03ff8,
        0x03cf0, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000,
    },
    {  // 0x76 'v'
        0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000,
        0x00000, 0x00000, 0x00000, 0x0781e, 0x03c1e, 0x03c3c, 0x03c3c, 0x01e3c,
        0x01e38, 0x01e78, 0x00e78, 0x00f70, 0x00ff0, 0x007f0, 0x007e0, 0x007e0,
        0x003e0, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000,
    },
    {  // 0x77 'w'
        0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000,
        0x00000, 0x00000, 0x00000, 0x0f007, 0x07007, 0x0700f, 0x0700e, 0x073ce,
        0x073ce, 0x07bce, 0x03bee, 0x03bfe, 0x03f7c, 0x03e7c, 0x03e7c, 0x01e7c,
        0x01e3c, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000,
    },
    {  // 0x78 'x'
        0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000,
        0x00000, 0x00000, 0x00000, 0x03c3e, 0x03e3c, 0x01e78, 0x00ff0, 0x007f0,
        0x007e0, 0x003c0, 0x003e0, 0x007e0, 0x00ff0, 0x01f78, 0x01e7c, 0x03c3c,
        0x07c1e, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000,
    },
    {  // 0x79 'y'
        0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000,
        0x00000, 0x00000, 0x00000, 0x0781e, 0x03c1e, 0x03c3c, 0x03c3c, 0x01e3c,
        0x01e78, 0x01e78, 0x00f70, 0x00ff0, 0x007f0, 0x007e0, 0x007e0, 0x003c0,
        0x003c0, 0x001c0, 0x001e0, 0x000fe, 0x000fe, 0x0007e, 0x00000, 0x00000,
    },
    {  // 0x7a 'z'
        0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000,
        0x00000, 0x00000, 0x00000, 0x03ffc, 0x03ffc, 0x03ffc, 0x01e00, 0x00f00,
        0x00780, 0x003c0, 0x003e0, 0x001f0, 0x000f8, 0x00078, 0x03ffc, 0x03ffc,
        0x03ffc, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000,
    },
    {  // 0x7b '{'
        0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x01f00, 0x01f80, 0x003c0,
        0x003c0, 0x003c0, 0x003c0, 0x003c0, 0x003c0, 0x003c0, 0x003c0, 0x001e0,
        0x000fc, 0x000fc, 0x001e0, 0x003c0, 0x003c0, 0x003c0, 0x003c0, 0x003c0,
        0x003c0, 0x003c0, 0x003c0, 0x01f80, 0x01f00, 0x00000, 0x00000, 0x00000,
    },
    {  // 0x7c '|'
        0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x001c0, 0x001c0, 0x001c0,
        0x001c0, 0x001c0, 0x001c0, 0x001c0, 0x001c0, 0x001c0, 0x001c0, 0x001c0,
        0x001c0, 0x001c0, 0x001c0, 0x001c0, 0x001c0, 0x001c0, 0x001c0, 0x001c0,
        0x001c0, 0x001c0, 0x001c0, 0x001c0, 0x001c0, 0x001c0, 0x001c0, 0x00000,
    },
    {  // 0x7d '}'
        0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x000fc, 0x001fc, 0x001e0,
        0x003c0, 0x003c0, 0x003c0, 0x003c0, 0x003c0, 0x003c0, 0x003c0, 0x007c0,
        0x03f80, 0x03f80, 0x007c0, 0x003c0, 0x003c0, 0x003c0, 0x003c0, 0x003c0,
        0x003c0, 0x003c0, 0x001e0, 0x001fc, 0x000fc, 0x00000, 0x00000, 0x00000,
    },
    {  // 0x7e '~'
        0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000,
        0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x04078,
        0x071fe, 0x07ffe, 0x03f86, 0x01e02, 0x00000, 0x00000, 0x00000, 0x00000,
        0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000, 0x00000,
    },
};

}  // namespace geosta::fontdata
