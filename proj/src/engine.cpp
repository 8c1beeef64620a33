#include "ige/engine.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <unordered_set>

namespace ige {

Rotation AdversaryStrategy::rotation_for(std::uint64_t round, Position robot) const {
  switch (kind_) {
    case Kind::Identity: return Rotation::identity();
    case Kind::PingPong: return Rotation(round % 2 == 0 ? 0 : 2);
    case Kind::SeededRandom: {
      const auto x = static_cast<std::uint64_t>(robot.x);
      const auto y = static_cast<std::uint64_t>(robot.y);
      std::seed_seq seq{static_cast<std::uint32_t>(seed_), static_cast<std::uint32_t>(seed_ >> 32),
                        static_cast<std::uint32_t>(round), static_cast<std::uint32_t>(round >> 32),
                        static_cast<std::uint32_t>(x), static_cast<std::uint32_t>(x >> 32),
                        static_cast<std::uint32_t>(y), static_cast<std::uint32_t>(y >> 32)};
      std::array<std::uint32_t, 1> out{};
      seq.generate(out.begin(), out.end());
      return Rotation(static_cast<int>(out[0] & 3U));
    }
  }
  return Rotation::identity();
}

std::string AdversaryStrategy::describe() const {
  switch (kind_) {
    case Kind::Identity: return "identity";
    case Kind::PingPong: return "pingpong";
    case Kind::SeededRandom: return "random:" + std::to_string(seed_);
  }
  return "?";
}

const char* violation_name(ViolationEvent::Kind k) {
  return k == ViolationEvent::Kind::NodeCollision ? "collision" : "swap";
}

NodeCollision::NodeCollision(std::uint64_t r, Position t)
    : std::runtime_error("node collision at (" + std::to_string(t.x) + "," + std::to_string(t.y) +
                         ") in round " + std::to_string(r)),
      round(r),
      target(t) {}

RunAborted::RunAborted(const NodeCollision& cause, Trace p)
    : std::runtime_error(cause.what()), round(cause.round), target(cause.target), partial(std::move(p)) {}

StepResult step(const CompiledRuleSet& rules, const Configuration& c, const AdversaryStrategy& adversary,
                std::uint64_t round) {
  StepResult result;
  const auto robots = c.sorted();
  result.moves.reserve(robots.size());

  for (const auto& [p, color] : robots) {
    if (!rules.colors().contains(color)) {
      throw UnknownColor("robot at (" + std::to_string(p.x) + "," + std::to_string(p.y) +
                         ") has a color outside the palette");
    }
    const View global = view_at(c, p, rules.phi());
    const Rotation r = adversary.rotation_for(round, p);
    const RuleOutput local = rules.match(rotate_view(r, global));
    const Move m = rotate_move(r.inverse(), local.move);
    result.moves.push_back({p, p + move_offset(m), local.new_color.value_or(color)});
  }

  std::unordered_map<Position, std::size_t, PositionHash> target_of;
  target_of.reserve(result.moves.size());
  for (std::size_t i = 0; i < result.moves.size(); ++i) {
    if (!target_of.emplace(result.moves[i].to, i).second) throw NodeCollision(round, result.moves[i].to);
  }

  std::unordered_map<Position, std::size_t, PositionHash> source_of;
  for (std::size_t i = 0; i < result.moves.size(); ++i) source_of.emplace(result.moves[i].from, i);
  for (const RobotMove& m : result.moves) {
    if (m.from == m.to) continue;
    auto it = source_of.find(m.to);
    if (it == source_of.end()) continue;
    const RobotMove& other = result.moves[it->second];
    // Report each swapped pair once, from its smaller endpoint.
    if (other.to == m.from && m.from < m.to) {
      result.violations.push_back({round, ViolationEvent::Kind::EdgeSwap, {m.from, m.to}});
    }
  }

  for (const RobotMove& m : result.moves) result.next.place(m.to, m.color);
  return result;
}

Simulation::Simulation(const CompiledRuleSet& rules, Configuration initial, AdversaryStrategy adversary,
                       bool record_configurations)
    : rules_(rules), adversary_(adversary), record_(record_configurations), current_(std::move(initial)) {
  trace_.rule_set_name = rules.source().name;
  if (record_) {
    trace_.configurations.push_back(current_);
    const auto robots = current_.sorted();
    trace_.robot_tracks.resize(robots.size());
    for (std::size_t id = 0; id < robots.size(); ++id) {
      trace_.robot_tracks[id].push_back({robots[id].first, robots[id].second});
      id_at_.emplace(robots[id].first, id);
    }
  }
}

const Configuration& Simulation::advance() {
  StepResult s = step(rules_, current_, adversary_, round_);
  ++round_;
  if (record_) {
    std::unordered_map<Position, std::size_t, PositionHash> next_ids;
    next_ids.reserve(s.moves.size());
    for (const RobotMove& m : s.moves) {
      const std::size_t id = id_at_.at(m.from);
      trace_.robot_tracks[id].push_back({m.to, m.color});
      next_ids.emplace(m.to, id);
    }
    id_at_ = std::move(next_ids);
    trace_.configurations.push_back(s.next);
    trace_.violations.insert(trace_.violations.end(), s.violations.begin(), s.violations.end());
  }
  current_ = std::move(s.next);
  return current_;
}

Trace run_from(const CompiledRuleSet& rules, const Configuration& initial, std::uint64_t rounds,
               const AdversaryStrategy& adversary) {
  Simulation sim(rules, initial, adversary);
  for (std::uint64_t k = 0; k < rounds; ++k) {
    try {
      sim.advance();
    } catch (const NodeCollision& e) {
      throw RunAborted(e, sim.release());
    }
  }
  return sim.release();
}

Trace run(const CompiledRuleSet& rules, std::uint64_t rounds, const AdversaryStrategy& adversary) {
  return run_from(rules, rules.source().initial, rounds, adversary);
}

std::vector<Position> visited_until(const Trace& t, std::uint64_t last_round) {
  std::unordered_set<Position, PositionHash> seen;
  const std::size_t end = std::min<std::size_t>(t.configurations.size(), last_round + 1);
  for (std::size_t k = 0; k < end; ++k) {
    for (const auto& [p, col] : t.configurations[k].robots()) seen.insert(p);
  }
  std::vector<Position> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Position> visited_set(const Trace& t) {
  return visited_until(t, t.configurations.empty() ? 0 : t.configurations.size() - 1);
}

}  // namespace ige
