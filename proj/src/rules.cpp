#include "ige/rules.hpp"

#include <sstream>

namespace ige {

bool PatternCell::matches(const CellState& s) const {
  switch (kind) {
    case Kind::DontCare: return true;
    case Kind::MustBeEmpty: return s.kind == CellState::Kind::Empty;
    case Kind::MustBeOccupied: return s.kind == CellState::Kind::Occupied && s.color == color;
  }
  return false;
}

RulePattern RulePattern::lone(int phi, ColorId self) {
  RulePattern p;
  p.phi = phi;
  p.cells.assign(ball_size(phi), PatternCell::empty());
  p.at({0, 0}) = PatternCell::occupied(self);
  return p;
}

bool RulePattern::matches(const View& v) const {
  if (v.phi != phi) return false;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (!cells[i].matches(v.cells[i])) return false;
  }
  return true;
}

RulePattern rotate_pattern(Rotation r, const RulePattern& p) {
  RulePattern out;
  out.phi = p.phi;
  out.cells.resize(p.cells.size());
  const auto& offsets = ball_offsets(p.phi);
  for (std::size_t i = 0; i < offsets.size(); ++i) {
    out.cells[ball_index(p.phi, rotate_offset(r, offsets[i]))] = p.cells[i];
  }
  return out;
}

namespace {

std::string describe(Offset o) {
  std::ostringstream s;
  s << "(" << o.x << "," << o.y << ")";
  return s.str();
}

std::string describe(const RuleOutput& out, const Palette* colors) {
  std::string s = move_name(out.move);
  if (out.new_color) {
    s += " color=";
    s += colors && colors->contains(*out.new_color) ? colors->label(*out.new_color)
                                                    : std::to_string(*out.new_color);
  }
  return s;
}

}  // namespace

void check_structure(const RuleSet& rs) {
  auto fail = [&](const std::string& what) {
    throw std::invalid_argument("rule set '" + rs.name + "': " + what);
  };
  if (rs.phi < 1) fail("visibility range must be positive");
  if (rs.colors.size() == 0) fail("no colors");
  for (const auto& [p, col] : rs.initial.robots()) {
    if (!rs.colors.contains(col)) fail("initial robot at " + describe(p) + " has unknown color");
  }
  for (std::size_t i = 0; i < rs.rules.size(); ++i) {
    const Rule& rule = rs.rules[i];
    const std::string where = "rule " + std::to_string(i) + ": ";
    if (rule.pattern.phi != rs.phi) fail(where + "pattern range differs from the rule set's");
    if (rule.pattern.cells.size() != ball_size(rs.phi)) fail(where + "pattern has wrong cell count");
    if (!rule.pattern.center().is_occupied()) fail(where + "center must be an occupied cell");
    for (const PatternCell& c : rule.pattern.cells) {
      if (c.is_occupied() && !rs.colors.contains(c.color)) fail(where + "pattern uses unknown color");
    }
    if (rule.new_color) {
      if (!rs.lights_modifiable) fail(where + "color change in a rule set with fixed lights");
      if (!rs.colors.contains(*rule.new_color)) fail(where + "new color not in palette");
    }
  }
}

std::pair<RulePattern, std::size_t> normalize_pattern(const RulePattern& p, std::vector<Offset>* changed) {
  RulePattern out = p;
  std::size_t count = 0;
  const auto& offsets = ball_offsets(p.phi);
  for (std::size_t i = 0; i < offsets.size(); ++i) {
    for (Offset between : points_strictly_between(offsets[i])) {
      if (p.at(between).is_occupied()) {
        if (out.cells[i].kind != PatternCell::Kind::DontCare) {
          out.cells[i] = PatternCell::dont_care();
          ++count;
          if (changed) changed->push_back(offsets[i]);
        }
        break;
      }
    }
  }
  return {std::move(out), count};
}

std::vector<ExpandedRule> expand_rotations(const std::vector<ExpandedRule>& rules) {
  std::vector<ExpandedRule> out;
  for (const ExpandedRule& rule : rules) {
    for (int q = 0; q < 4; ++q) {
      const Rotation r(q);
      ExpandedRule e{rotate_pattern(r, rule.pattern),
                     {rotate_move(r, rule.output.move), rule.output.new_color},
                     rule.source,
                     rule.rotation.then(r)};
      bool duplicate = false;
      for (const ExpandedRule& seen : out) {
        if (seen.pattern == e.pattern && seen.output == e.output) {
          duplicate = true;
          break;
        }
      }
      if (!duplicate) out.push_back(std::move(e));
    }
  }
  return out;
}

std::vector<ExpandedRule> expand_rotations(const RuleSet& rs) {
  std::vector<ExpandedRule> seeds;
  seeds.reserve(rs.rules.size());
  for (std::size_t i = 0; i < rs.rules.size(); ++i) {
    seeds.push_back({rs.rules[i].pattern, rs.rules[i].output(), i, Rotation::identity()});
  }
  return expand_rotations(seeds);
}

bool patterns_overlap(const RulePattern& a, const RulePattern& b) {
  if (a.phi != b.phi) return false;
  // The least occupied view consistent with both patterns is the best
  // witness: extra robots can only add occlusion.
  View witness;
  witness.phi = a.phi;
  witness.cells.resize(a.cells.size());
  for (std::size_t i = 0; i < a.cells.size(); ++i) {
    const PatternCell& x = a.cells[i];
    const PatternCell& y = b.cells[i];
    if (x.is_occupied() && y.is_occupied() && x.color != y.color) return false;
    if (x.is_occupied() && y.kind == PatternCell::Kind::MustBeEmpty) return false;
    if (y.is_occupied() && x.kind == PatternCell::Kind::MustBeEmpty) return false;
    if (x.is_occupied()) {
      witness.cells[i] = CellState::occupied(x.color);
    } else if (y.is_occupied()) {
      witness.cells[i] = CellState::occupied(y.color);
    } else {
      witness.cells[i] = CellState::empty();
    }
  }
  apply_occlusion(witness);
  return a.matches(witness) && b.matches(witness);
}

ValidationReport validate(const RuleSet& rs) {
  ValidationReport report;
  std::vector<RulePattern> patterns;
  patterns.reserve(rs.rules.size());
  for (std::size_t i = 0; i < rs.rules.size(); ++i) {
    std::vector<Offset> changed;
    auto [normalized, count] = normalize_pattern(rs.rules[i].pattern, &changed);
    for (Offset o : changed) {
      report.normalization_warnings.push_back(
          {i, o, "cell " + describe(o) + " is hidden behind an occupied cell; treated as don't-care"});
    }
    patterns.push_back(std::move(normalized));
  }

  for (std::size_t i = 0; i < rs.rules.size(); ++i) {
    const RuleOutput out_i = rs.rules[i].output();
    for (int q = 1; q < 4; ++q) {
      const Rotation r(q);
      const RuleOutput rotated{rotate_move(r, out_i.move), out_i.new_color};
      if (rotated != out_i && patterns_overlap(patterns[i], rotate_pattern(r, patterns[i]))) {
        report.adversary_controlled.push_back(i);
        break;
      }
    }
    for (std::size_t j = i + 1; j < rs.rules.size(); ++j) {
      const RuleOutput out_j = rs.rules[j].output();
      for (int q = 0; q < 4; ++q) {
        const Rotation r(q);
        const RulePattern rotated = rotate_pattern(r, patterns[j]);
        const RuleOutput rotated_out{rotate_move(r, out_j.move), out_j.new_color};
        if (rotated_out == out_i) continue;
        const bool identical = rotated == patterns[i];
        if (identical || patterns_overlap(patterns[i], rotated)) {
          std::ostringstream d;
          d << (identical ? "identical patterns" : "overlapping patterns") << " with different outputs: rule "
            << i << " -> " << describe(out_i, &rs.colors) << ", rule " << j << " rotated by "
            << r.quarter_turns() << " quarter turn(s) -> " << describe(rotated_out, &rs.colors);
          report.conflicts.push_back({i, j, r, d.str()});
        }
      }
    }
  }
  return report;
}

namespace {

// Two matching rules with different outputs are ambiguous, except for the
// rotations of one symmetric source rule: the robot then applies that rule as
// written in its own frame, so the adversary's rotation picks the move.
const ExpandedRule* resolve(const ExpandedRule* found, const ExpandedRule* rule) {
  if (found == nullptr || found->output == rule->output) return rule;
  if (found->source != rule->source) {
    throw AmbiguousMatch("view matches rules " + std::to_string(found->source) + " and " +
                         std::to_string(rule->source) + " with different outputs");
  }
  return rule->rotation.quarter_turns() < found->rotation.quarter_turns() ? rule : found;
}

}  // namespace

RuleOutput match(const std::vector<ExpandedRule>& rules, const View& v) {
  const ExpandedRule* found = nullptr;
  for (const ExpandedRule& rule : rules) {
    if (!rule.pattern.matches(v)) continue;
    found = resolve(found, &rule);
  }
  if (found == nullptr) return {Move::Idle, v.center().color};
  return {found->output.move, found->output.new_color.value_or(v.center().color)};
}

CompiledRuleSet::CompiledRuleSet(RuleSet rs) : source_(std::move(rs)) {
  check_structure(source_);
  for (Rule& rule : source_.rules) rule.pattern = normalize_pattern(rule.pattern).first;
  expanded_ = expand_rotations(source_);
  by_center_.resize(source_.colors.size());
  for (std::size_t i = 0; i < expanded_.size(); ++i) {
    by_center_[expanded_[i].pattern.center().color].push_back(i);
  }
}

RuleOutput CompiledRuleSet::match(const View& v) const {
  const CellState& self = v.center();
  if (!self.is_occupied() || self.color >= by_center_.size()) {
    throw std::invalid_argument("view center is not a robot with a known color");
  }
  const ExpandedRule* found = nullptr;
  for (std::size_t i : by_center_[self.color]) {
    const ExpandedRule& rule = expanded_[i];
    if (!rule.pattern.matches(v)) continue;
    found = resolve(found, &rule);
  }
  if (found == nullptr) return {Move::Idle, self.color};
  return {found->output.move, found->output.new_color.value_or(self.color)};
}

}  // namespace ige
