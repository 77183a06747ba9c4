#pragma once

#include <string>
#include <vector>

#include "pfh/lattice.hpp"

namespace pfh {

struct SvgLabel {
    std::string text;
    Vec2 at;  // lattice coordinates
};

// Lattice figure: light unit grid, one polyline per path, 20 user units per
// lattice step. q points up; the single y flip to screen coordinates is
// y = -20 q.
std::string render_svg(const std::vector<ConvexPath>& paths,
                       const std::vector<SvgLabel>& labels);

}  // namespace pfh
