#pragma once

#include <string>

#include "ige/grid.hpp"

namespace ige {

struct Viewport {
  Coord x0 = 0;
  Coord y0 = 0;
  Coord x1 = 0;
  Coord y1 = 0;
};

enum class FrameFormat { Ascii, Svg };

// Throws std::invalid_argument unless x0 <= x1 and y0 <= y1.
//
// Ascii: one row per y from y1 down to y0, cells separated by one space,
// `.` for an empty node and the first character of the color label otherwise.
// Svg: a standalone document with grid lines and one labeled circle per robot.
std::string render_frame(const Configuration& c, const Palette& colors, const Viewport& viewport,
                         FrameFormat format, const std::string& title = {});

// Smallest viewport containing every robot, grown by `margin` on each side.
Viewport bounding_viewport(const Configuration& c, Coord margin = 1);

}  // namespace ige
