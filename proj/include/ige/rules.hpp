#pragma once

// Rule tables for luminous robots. A rule is written for one global
// orientation; robots apply it under every quarter-turn rotation, so a rule
// set is well defined only if its rotation closure never gives one view two
// different outcomes.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ige/grid.hpp"

namespace ige {

struct PatternCell {
  enum class Kind : std::uint8_t { MustBeEmpty, MustBeOccupied, DontCare };

  Kind kind = Kind::MustBeEmpty;
  ColorId color = 0;  // meaningful only for MustBeOccupied

  static constexpr PatternCell empty() { return {Kind::MustBeEmpty, 0}; }
  static constexpr PatternCell occupied(ColorId c) { return {Kind::MustBeOccupied, c}; }
  static constexpr PatternCell dont_care() { return {Kind::DontCare, 0}; }

  bool is_occupied() const { return kind == Kind::MustBeOccupied; }
  bool matches(const CellState& s) const;

  friend bool operator==(const PatternCell& a, const PatternCell& b) {
    return a.kind == b.kind && (a.kind != Kind::MustBeOccupied || a.color == b.color);
  }
};

struct RulePattern {
  int phi = 1;
  std::vector<PatternCell> cells;  // indexed like ball_offsets(phi)

  // All cells MustBeEmpty except the center.
  static RulePattern lone(int phi, ColorId self);

  const PatternCell& at(Offset o) const { return cells[ball_index(phi, o)]; }
  PatternCell& at(Offset o) { return cells[ball_index(phi, o)]; }
  const PatternCell& center() const { return at({0, 0}); }

  bool matches(const View& v) const;

  friend bool operator==(const RulePattern&, const RulePattern&) = default;
};

RulePattern rotate_pattern(Rotation r, const RulePattern& p);

struct RuleOutput {
  Move move = Move::Idle;
  std::optional<ColorId> new_color;

  friend bool operator==(const RuleOutput&, const RuleOutput&) = default;
};

struct Rule {
  RulePattern pattern;
  Move move = Move::Idle;
  std::optional<ColorId> new_color;

  RuleOutput output() const { return {move, new_color}; }

  friend bool operator==(const Rule&, const Rule&) = default;
};

struct RuleSet {
  std::string name;
  int phi = 1;
  Palette colors;
  bool lights_modifiable = false;
  std::vector<Rule> rules;
  Configuration initial;

  friend bool operator==(const RuleSet&, const RuleSet&) = default;
};

// Throws std::invalid_argument when the rule set is not structurally sound:
// phi mismatch, color outside the palette, center not occupied, a color
// change in a fixed-light set, or an ill-formed pattern.
void check_structure(const RuleSet& rs);

struct NormalizationWarning {
  std::size_t rule_index = 0;
  Offset offset;
  std::string description;
};

// Forces DontCare on every cell hidden behind a MustBeOccupied cell. The
// returned count is how many cells had to change.
std::pair<RulePattern, std::size_t> normalize_pattern(const RulePattern& p,
                                                      std::vector<Offset>* changed = nullptr);

struct ExpandedRule {
  RulePattern pattern;
  RuleOutput output;
  std::size_t source = 0;  // index into RuleSet::rules
  Rotation rotation;
};

// Every source rule under the four rotations, with exact duplicates removed.
// Expects normalized patterns.
std::vector<ExpandedRule> expand_rotations(const RuleSet& rs);
// Same closure for an already expanded list; idempotent.
std::vector<ExpandedRule> expand_rotations(const std::vector<ExpandedRule>& rules);

struct RuleConflict {
  std::size_t first = 0;
  std::size_t second = 0;
  Rotation rotation;  // applied to `second` to collide with `first`
  std::string description;
};

struct ValidationReport {
  std::vector<RuleConflict> conflicts;
  // Source rules whose pattern is matched by one of its own nontrivial
  // rotations while the rotated output differs: the adversary picks the move.
  std::vector<std::size_t> adversary_controlled;
  std::vector<NormalizationWarning> normalization_warnings;

  bool well_defined() const { return conflicts.empty() && adversary_controlled.empty(); }
  // True when only adversary-controlled rules stand in the way.
  bool acceptable(bool allow_symmetric) const {
    return conflicts.empty() && (allow_symmetric || adversary_controlled.empty());
  }
};

// Two patterns overlap when some realizable view (occlusion included)
// satisfies both.
bool patterns_overlap(const RulePattern& a, const RulePattern& b);

ValidationReport validate(const RuleSet& rs);

class AmbiguousMatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Output of the unique rule matching `v`; Idle with the current color when
// nothing matches. Rotations of one symmetric rule resolve to the rule as
// written (rotation 0 of the robot's frame). Throws AmbiguousMatch when rules
// from two different sources match with different outputs, which a validated
// rule set never allows.
RuleOutput match(const std::vector<ExpandedRule>& rules, const View& v);

// A rule set prepared for execution: normalized and rotation-closed.
class CompiledRuleSet {
 public:
  explicit CompiledRuleSet(RuleSet rs);

  const RuleSet& source() const { return source_; }
  const std::vector<ExpandedRule>& expanded() const { return expanded_; }
  int phi() const { return source_.phi; }
  const Palette& colors() const { return source_.colors; }

  RuleOutput match(const View& v) const;

 private:
  RuleSet source_;
  std::vector<ExpandedRule> expanded_;
  // expanded_ indices grouped by center color
  std::vector<std::vector<std::size_t>> by_center_;
};

}  // namespace ige
