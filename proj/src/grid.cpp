#include "ige/grid.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace ige {

Offset move_offset(Move m) {
  switch (m) {
    case Move::Idle: return {0, 0};
    case Move::Up: return {0, 1};
    case Move::Down: return {0, -1};
    case Move::Left: return {-1, 0};
    case Move::Right: return {1, 0};
  }
  return {0, 0};
}

Move move_from_offset(Offset o) {
  if (o == Offset{0, 0}) return Move::Idle;
  if (o == Offset{0, 1}) return Move::Up;
  if (o == Offset{0, -1}) return Move::Down;
  if (o == Offset{-1, 0}) return Move::Left;
  if (o == Offset{1, 0}) return Move::Right;
  throw std::invalid_argument("offset is not a unit move");
}

const char* move_name(Move m) {
  switch (m) {
    case Move::Idle: return "idle";
    case Move::Up: return "up";
    case Move::Down: return "down";
    case Move::Left: return "left";
    case Move::Right: return "right";
  }
  return "?";
}

bool parse_move(std::string_view text, Move& out) {
  for (Move m : {Move::Idle, Move::Up, Move::Down, Move::Left, Move::Right}) {
    if (text == move_name(m)) {
      out = m;
      return true;
    }
  }
  return false;
}

Coord manhattan_distance(Position p, Position q) {
  return std::llabs(p.x - q.x) + std::llabs(p.y - q.y);
}

Offset rotate_offset(Rotation r, Offset o) {
  switch (r.quarter_turns()) {
    case 1: return {-o.y, o.x};
    case 2: return {-o.x, -o.y};
    case 3: return {o.y, -o.x};
    default: return o;
  }
}

Move rotate_move(Rotation r, Move m) { return move_from_offset(rotate_offset(r, move_offset(m))); }

Palette::Palette(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.size() > 256) throw std::invalid_argument("too many colors");
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i].empty()) throw std::invalid_argument("empty color label");
    for (std::size_t j = 0; j < i; ++j) {
      if (labels_[i] == labels_[j]) throw std::invalid_argument("duplicate color label '" + labels_[i] + "'");
    }
  }
}

const std::string& Palette::label(ColorId id) const {
  if (!contains(id)) throw std::out_of_range("color id " + std::to_string(id) + " not in palette");
  return labels_[id];
}

bool Palette::find(std::string_view label, ColorId& out) const {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) {
      out = static_cast<ColorId>(i);
      return true;
    }
  }
  return false;
}

ColorId Palette::id(std::string_view label) const {
  ColorId out = 0;
  if (!find(label, out)) throw std::invalid_argument("unknown color label '" + std::string(label) + "'");
  return out;
}

Configuration::Configuration(std::initializer_list<std::pair<Position, ColorId>> robots) {
  for (const auto& [p, c] : robots) place(p, c);
}

void Configuration::place(Position p, ColorId color) {
  if (!robots_.emplace(p, color).second) {
    std::ostringstream msg;
    msg << "node (" << p.x << "," << p.y << ") already occupied";
    throw std::invalid_argument(msg.str());
  }
}

const ColorId* Configuration::color_at(Position p) const {
  auto it = robots_.find(p);
  return it == robots_.end() ? nullptr : &it->second;
}

std::vector<std::pair<Position, ColorId>> Configuration::sorted() const {
  std::vector<std::pair<Position, ColorId>> out(robots_.begin(), robots_.end());
  std::sort(out.begin(), out.end());
  return out;
}

Configuration translate_configuration(const Configuration& c, Translation t) {
  Configuration out;
  for (const auto& [p, col] : c.robots()) out.place(translate(p, t), col);
  return out;
}

Configuration rotate_configuration(const Configuration& c, Rotation r, Position center) {
  Configuration out;
  for (const auto& [p, col] : c.robots()) out.place(center + rotate_offset(r, p - center), col);
  return out;
}

Coord farthest_pair_distance(const Configuration& c) {
  if (c.empty()) throw std::invalid_argument("farthest_pair_distance of an empty configuration");
  // Manhattan diameter: max over the two diagonal projections.
  Coord min_s = 0, max_s = 0, min_d = 0, max_d = 0;
  bool first = true;
  for (const auto& [p, col] : c.robots()) {
    Coord s = p.x + p.y;
    Coord d = p.x - p.y;
    if (first) {
      min_s = max_s = s;
      min_d = max_d = d;
      first = false;
    } else {
      min_s = std::min(min_s, s);
      max_s = std::max(max_s, s);
      min_d = std::min(min_d, d);
      max_d = std::max(max_d, d);
    }
  }
  return std::max(max_s - min_s, max_d - min_d);
}

namespace {

std::vector<Offset> make_ball(int phi) {
  std::vector<Offset> out;
  for (int y = phi; y >= -phi; --y) {
    int half = phi - std::abs(y);
    for (int x = -half; x <= half; ++x) out.push_back({x, y});
  }
  return out;
}

}  // namespace

const std::vector<Offset>& ball_offsets(int phi) {
  if (phi < 1) throw std::invalid_argument("visibility range must be positive");
  static std::mutex mu;
  static std::map<int, std::vector<Offset>> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(phi);
  if (it == cache.end()) it = cache.emplace(phi, make_ball(phi)).first;
  return it->second;
}

std::size_t ball_size(int phi) { return static_cast<std::size_t>(2 * phi * phi + 2 * phi + 1); }

std::size_t ball_index(int phi, Offset o) {
  const Coord p = phi;
  const Coord half = p - std::llabs(o.y);
  if (half < 0 || std::llabs(o.x) > half) throw std::out_of_range("offset outside the visibility ball");
  // Rows strictly above o.y, from y = phi down to o.y + 1.
  Coord before = 0;
  for (Coord y = p; y > o.y; --y) before += 2 * (p - std::llabs(y)) + 1;
  return static_cast<std::size_t>(before + o.x + half);
}

std::vector<Offset> points_strictly_between(Offset o) {
  const Coord g = std::gcd(std::llabs(o.x), std::llabs(o.y));
  std::vector<Offset> out;
  if (g <= 1) return out;
  const Offset step{o.x / g, o.y / g};
  for (Coord k = 1; k < g; ++k) out.push_back({step.x * k, step.y * k});
  return out;
}

void apply_occlusion(View& v) {
  const auto& offsets = ball_offsets(v.phi);
  std::vector<bool> blocks(offsets.size(), false);
  for (std::size_t i = 0; i < offsets.size(); ++i) {
    blocks[i] = offsets[i] != Offset{0, 0} && v.cells[i].is_occupied();
  }
  for (std::size_t i = 0; i < offsets.size(); ++i) {
    for (Offset between : points_strictly_between(offsets[i])) {
      if (blocks[ball_index(v.phi, between)]) {
        v.cells[i] = CellState::occluded();
        break;
      }
    }
  }
}

NotARobot::NotARobot(Position p)
    : std::invalid_argument("no robot at (" + std::to_string(p.x) + "," + std::to_string(p.y) + ")"),
      position(p) {}

View view_at(const Configuration& c, Position p, int phi) {
  const ColorId* own = c.color_at(p);
  if (own == nullptr) throw NotARobot(p);
  View v;
  v.phi = phi;
  const auto& offsets = ball_offsets(phi);
  v.cells.reserve(offsets.size());
  for (Offset o : offsets) {
    const ColorId* col = c.color_at(p + o);
    v.cells.push_back(col ? CellState::occupied(*col) : CellState::empty());
  }
  apply_occlusion(v);
  return v;
}

View rotate_view(Rotation r, const View& v) {
  View out;
  out.phi = v.phi;
  out.cells.resize(v.cells.size());
  const auto& offsets = ball_offsets(v.phi);
  for (std::size_t i = 0; i < offsets.size(); ++i) {
    out.cells[ball_index(v.phi, rotate_offset(r, offsets[i]))] = v.cells[i];
  }
  return out;
}

}  // namespace ige
