#pragma once

// Geometry of the infinite square lattice: positions, quarter-turn
// rotations, translations, sparse configurations and occluded views.
//
// Convention: x grows East, y grows North. A quarter turn is counterclockwise
// and maps (x, y) to (-y, x).

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <initializer_list>
#include <unordered_map>
#include <utility>
#include <vector>

namespace ige {

using Coord = std::int64_t;

struct Position {
  Coord x = 0;
  Coord y = 0;

  friend constexpr auto operator<=>(const Position&, const Position&) = default;
  friend constexpr Position operator+(Position a, Position b) { return {a.x + b.x, a.y + b.y}; }
  friend constexpr Position operator-(Position a, Position b) { return {a.x - b.x, a.y - b.y}; }
};

// Offsets relative to an observer share the representation of positions.
using Offset = Position;

struct PositionHash {
  std::size_t operator()(const Position& p) const noexcept {
    auto h = static_cast<std::uint64_t>(p.x) * 0x9E3779B97F4A7C15ULL;
    h ^= static_cast<std::uint64_t>(p.y) + 0x7F4A7C159E3779B9ULL + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h);
  }
};

enum class Move : std::uint8_t { Idle, Up, Down, Left, Right };

Offset move_offset(Move m);
// Inverse of move_offset on the five unit offsets; throws otherwise.
Move move_from_offset(Offset o);
const char* move_name(Move m);
// Accepts the lowercase names used in rule files ("up", "idle", ...).
bool parse_move(std::string_view text, Move& out);

class Rotation {
 public:
  constexpr Rotation() = default;
  constexpr explicit Rotation(int quarter_turns) : turns_(((quarter_turns % 4) + 4) % 4) {}

  constexpr int quarter_turns() const { return turns_; }
  constexpr Rotation inverse() const { return Rotation(4 - turns_); }
  constexpr Rotation then(Rotation other) const { return Rotation(turns_ + other.turns_); }

  static constexpr Rotation identity() { return Rotation(0); }

  friend constexpr bool operator==(Rotation, Rotation) = default;

 private:
  int turns_ = 0;
};

struct Translation {
  Coord dx = 0;
  Coord dy = 0;

  friend constexpr bool operator==(const Translation&, const Translation&) = default;
};

Coord manhattan_distance(Position p, Position q);
inline Coord manhattan_norm(Offset o) { return manhattan_distance(o, {0, 0}); }

Offset rotate_offset(Rotation r, Offset o);
Move rotate_move(Rotation r, Move m);
inline Position translate(Position p, Translation t) { return {p.x + t.dx, p.y + t.dy}; }

using ColorId = std::uint8_t;

// Ordered set of color labels; the index of a label is its ColorId.
class Palette {
 public:
  Palette() = default;
  explicit Palette(std::vector<std::string> labels);

  std::size_t size() const { return labels_.size(); }
  const std::string& label(ColorId id) const;
  bool find(std::string_view label, ColorId& out) const;
  ColorId id(std::string_view label) const;  // throws on unknown label
  bool contains(ColorId id) const { return id < labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }

  friend bool operator==(const Palette&, const Palette&) = default;

 private:
  std::vector<std::string> labels_;
};

// A finite set of robots, at most one per node, each with a light color.
class Configuration {
 public:
  using Map = std::unordered_map<Position, ColorId, PositionHash>;

  Configuration() = default;
  Configuration(std::initializer_list<std::pair<Position, ColorId>> robots);

  // Throws std::invalid_argument if the node is already occupied.
  void place(Position p, ColorId color);
  bool occupied(Position p) const { return robots_.count(p) != 0; }
  const ColorId* color_at(Position p) const;

  std::size_t size() const { return robots_.size(); }
  bool empty() const { return robots_.empty(); }
  const Map& robots() const { return robots_; }

  // Robots ordered by (x, y); the canonical iteration order for output.
  std::vector<std::pair<Position, ColorId>> sorted() const;

  friend bool operator==(const Configuration& a, const Configuration& b) {
    return a.robots_ == b.robots_;
  }

 private:
  Map robots_;
};

Configuration translate_configuration(const Configuration& c, Translation t);
// Rotates every robot about `center`.
Configuration rotate_configuration(const Configuration& c, Rotation r, Position center = {0, 0});
// Throws std::invalid_argument on an empty configuration.
Coord farthest_pair_distance(const Configuration& c);

// Offsets of the Manhattan ball of radius phi, in row order: North to South,
// then West to East within a row. This is also the rule-file cell order.
const std::vector<Offset>& ball_offsets(int phi);
std::size_t ball_size(int phi);
// Index of `o` in ball_offsets(phi); requires manhattan_norm(o) <= phi.
std::size_t ball_index(int phi, Offset o);

// Lattice points strictly between the origin and `o` on the segment joining them.
std::vector<Offset> points_strictly_between(Offset o);

struct CellState {
  enum class Kind : std::uint8_t { Empty, Occupied, Occluded };

  Kind kind = Kind::Empty;
  ColorId color = 0;  // meaningful only when Occupied

  static constexpr CellState empty() { return {Kind::Empty, 0}; }
  static constexpr CellState occupied(ColorId c) { return {Kind::Occupied, c}; }
  static constexpr CellState occluded() { return {Kind::Occluded, 0}; }

  bool is_occupied() const { return kind == Kind::Occupied; }

  friend bool operator==(const CellState& a, const CellState& b) {
    return a.kind == b.kind && (a.kind != Kind::Occupied || a.color == b.color);
  }
};

// What a robot perceives: every cell of its phi-ball, centered on itself.
struct View {
  int phi = 1;
  std::vector<CellState> cells;  // indexed like ball_offsets(phi)

  const CellState& at(Offset o) const { return cells[ball_index(phi, o)]; }
  CellState& at(Offset o) { return cells[ball_index(phi, o)]; }
  const CellState& center() const { return at({0, 0}); }

  friend bool operator==(const View&, const View&) = default;
};

// Marks as Occluded every cell hidden behind an occupied cell. Cells that are
// already Occluded on entry count as unoccupied.
void apply_occlusion(View& v);

class NotARobot : public std::invalid_argument {
 public:
  explicit NotARobot(Position p);
  Position position;
};

// Globally oriented view of the robot at `p`; throws NotARobot if `p` is empty.
View view_at(const Configuration& c, Position p, int phi);
View rotate_view(Rotation r, const View& v);

}  // namespace ige
