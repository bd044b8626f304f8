#ifndef TOPOCROSS_SVG_HPP
#define TOPOCROSS_SVG_HPP

#include "topocross/drawing.hpp"

#include <string>

namespace topocross {

// Presentation-only rendering: vertices, colored edges, crossing dots, and
// face anchor labels. Deterministic for a fixed input.
std::string render_svg(const Drawing& d);

} // namespace topocross

#endif
