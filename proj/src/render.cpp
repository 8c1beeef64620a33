#include "ige/render.hpp"

#include <algorithm>
#include <array>
#include <sstream>
#include <stdexcept>

namespace ige {

namespace {

constexpr int kCell = 24;

const char* fill_for(ColorId c) {
  static constexpr std::array<const char*, 8> kFills = {"#1f77b4", "#2ca02c", "#d62728", "#ff7f0e",
                                                        "#9467bd", "#8c564b", "#e377c2", "#7f7f7f"};
  return kFills[c % kFills.size()];
}

std::string escape_xml(const std::string& s) {
  std::string out;
  for (char ch : s) {
    switch (ch) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += ch;
    }
  }
  return out;
}

std::string ascii(const Configuration& c, const Palette& colors, const Viewport& v) {
  std::string out;
  for (Coord y = v.y1; y >= v.y0; --y) {
    for (Coord x = v.x0; x <= v.x1; ++x) {
      if (x > v.x0) out += ' ';
      const ColorId* col = c.color_at({x, y});
      out += col ? colors.label(*col).front() : '.';
    }
    out += '\n';
  }
  return out;
}

std::string svg(const Configuration& c, const Palette& colors, const Viewport& v, const std::string& title) {
  const Coord cols = v.x1 - v.x0 + 1;
  const Coord rows = v.y1 - v.y0 + 1;
  const Coord width = cols * kCell;
  const Coord height = rows * kCell;
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
  if (!title.empty()) out << "  <title>" << escape_xml(title) << "</title>\n";
  out << "  <rect width=\"" << width << "\" height=\"" << height << "\" fill=\"white\"/>\n";
  out << "  <g stroke=\"#cccccc\" stroke-width=\"1\">\n";
  for (Coord i = 0; i < cols; ++i) {
    const Coord x = i * kCell + kCell / 2;
    out << "    <line x1=\"" << x << "\" y1=\"0\" x2=\"" << x << "\" y2=\"" << height << "\"/>\n";
  }
  for (Coord j = 0; j < rows; ++j) {
    const Coord y = j * kCell + kCell / 2;
    out << "    <line x1=\"0\" y1=\"" << y << "\" x2=\"" << width << "\" y2=\"" << y << "\"/>\n";
  }
  out << "  </g>\n";
  for (const auto& [p, col] : c.sorted()) {
    if (p.x < v.x0 || p.x > v.x1 || p.y < v.y0 || p.y > v.y1) continue;
    const Coord cx = (p.x - v.x0) * kCell + kCell / 2;
    const Coord cy = (v.y1 - p.y) * kCell + kCell / 2;
    out << "  <circle cx=\"" << cx << "\" cy=\"" << cy << "\" r=\"" << kCell * 2 / 5 << "\" fill=\""
        << fill_for(col) << "\" stroke=\"black\"/>\n";
    out << "  <text x=\"" << cx << "\" y=\"" << cy + 4
        << "\" font-family=\"monospace\" font-size=\"11\" text-anchor=\"middle\" fill=\"white\">"
        << escape_xml(colors.label(col)) << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace

std::string render_frame(const Configuration& c, const Palette& colors, const Viewport& viewport,
                         FrameFormat format, const std::string& title) {
  if (viewport.x0 > viewport.x1 || viewport.y0 > viewport.y1) {
    throw std::invalid_argument("degenerate viewport");
  }
  return format == FrameFormat::Ascii ? ascii(c, colors, viewport) : svg(c, colors, viewport, title);
}

Viewport bounding_viewport(const Configuration& c, Coord margin) {
  if (c.empty()) return {-margin, -margin, margin, margin};
  Viewport v{0, 0, 0, 0};
  bool first = true;
  for (const auto& [p, col] : c.robots()) {
    if (first) {
      v = {p.x, p.y, p.x, p.y};
      first = false;
    }
    v.x0 = std::min(v.x0, p.x);
    v.y0 = std::min(v.y0, p.y);
    v.x1 = std::max(v.x1, p.x);
    v.y1 = std::max(v.y1, p.y);
  }
  return {v.x0 - margin, v.y0 - margin, v.x1 + margin, v.y1 + margin};
}

}  // namespace ige
