#pragma once

#include <string>

#include "puzzle/structure.hpp"

namespace puzzle {

enum class RenderFormat { ascii, svg };

struct RenderOptions {
    bool labels = false;   // interval values
    bool weights = true;   // (i,j) on equivariant pieces (svg)
    double side = 40.0;    // svg unit edge length in px
};

// One glyph per unit triangle, row r indented by n-r:
//   0 / 1  uniform F2 triangle      L R B  rhombus halves by direction
//   E      equivariant rhombus      P      polygon piece
//   *      any other triangle
std::string render_ascii(const Tiling& t, const RenderOptions& o = {});
std::string render_svg(const Tiling& t, const RenderOptions& o = {});
std::string render(const Tiling& t, RenderFormat f, const RenderOptions& o = {});

}  // namespace puzzle
