#pragma once

#include <string>

#include "meander/meanders.hpp"
#include "meander/paths.hpp"

namespace meander {

struct RenderOptions {
    int scale = 24;  // pixels per lattice unit, must be >= 4
};

// Standalone SVG of the grid polygon of (P, Q): checkerboard-shaded cells,
// the labeled boundary, and one <g class="trajectory"> polyline per
// trajectory with a cycling stroke palette. Deterministic for fixed input.
std::string render_polygon_svg(const DyckPath& p, const DyckPath& q,
                               const RenderOptions& options = {});

// Standalone SVG of a meander: 2n points on a horizontal line and one
// semicircular <path class="arch"> per arch, upper arches above the line,
// lower arches below.
std::string render_meander_svg(const Meander& t, const RenderOptions& options = {});

}  // namespace meander
