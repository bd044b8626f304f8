#ifndef TOPOCROSS_DRAWING_IO_HPP
#define TOPOCROSS_DRAWING_IO_HPP

#include "topocross/drawing.hpp"

#include <iosfwd>
#include <string>

namespace topocross {

// Line-oriented drawing format, version 1:
//   topocross-drawing v1
//   surface plane            or: surface cylinder H=<int>
//   k <int>
//   v <id> <x> <y> <label>
//   e <id> <v1> <v2> [<x> <y>]... [wrap <int-per-segment>...]
//   f <x> <y> <label>        face label anchor
// Writing is canonical (vertices, edges, anchors in stored order), so
// write(parse(text)) == text for files produced by write().
std::string write_drawing(const Drawing& d);
Drawing parse_drawing(const std::string& text);

Drawing load_drawing_file(const std::string& path);
void save_drawing_file(const Drawing& d, const std::string& path);

} // namespace topocross

#endif
