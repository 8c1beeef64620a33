#include "ige/verify.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <unordered_set>

namespace ige {

namespace {

PhaseComponent part(std::initializer_list<std::pair<Position, ColorId>> robots, Translation t) {
  return {Configuration(robots), t};
}

PhaseComponent corner(Position p, Translation t) { return {Configuration{{p, 0}}, t}; }

PhaseSpec make_a1_fixed() {
  // colors: L=0 F=1 B=2
  PhaseSpec s;
  s.algorithm = BuiltinId::A1Fixed;
  s.components = {
      part({{{-1, 0}, 1}, {{0, 0}, 0}}, {-1, -1}),
      part({{{0, -1}, 2}}, {-1, -1}),
      part({{{2, 0}, 2}}, {1, -1}),
      part({{{1, 2}, 2}}, {1, 1}),
      part({{{-2, 1}, 2}}, {-1, 1}),
  };
  s.corners = {corner({-1, 0}, {-1, -1}), corner({1, 0}, {1, -1}), corner({1, 1}, {1, 1}),
               corner({-1, 1}, {-1, 1})};
  return s;
}

PhaseSpec make_a1_modifiable() {
  // colors: R=0 Y=1 G=2 B=3 P=4
  PhaseSpec s;
  s.algorithm = BuiltinId::A1Modifiable;
  s.components = {
      part({{{1, -1}, 3}, {{1, -2}, 1}}, {-2, 1}),
      part({{{0, 0}, 2}}, {-2, 1}),
      part({{{3, -3}, 1}}, {1, -2}),
      part({{{2, 1}, 0}}, {1, 1}),
  };
  s.corners = {corner({0, 0}, {-2, 1}), corner({2, -2}, {1, -2}), corner({2, 0}, {1, 1})};
  return s;
}

PhaseSpec make_a2_nolights() {
  PhaseSpec s;
  s.algorithm = BuiltinId::A2NoLights;
  s.components = {
      part({{{3, 2}, 0}, {{3, 3}, 0}, {{4, 3}, 0}}, {1, 1}),
      part({{{0, 0}, 0}}, {-1, -1}),
      part({{{5, -1}, 0}}, {1, -1}),
      part({{{5, 4}, 0}}, {1, 1}),
      part({{{1, 5}, 0}}, {-1, 1}),
  };
  s.corners = {corner({2, 1}, {-1, -1}), corner({4, 1}, {1, -1}), corner({4, 3}, {1, 1}),
               corner({2, 3}, {-1, 1})};
  s.includes_start_node = true;
  return s;
}

Translation scaled(Translation t, std::uint64_t k) {
  const auto n = static_cast<Coord>(k);
  return {t.dx * n, t.dy * n};
}

Position corner_at(const PhaseComponent& c, std::uint64_t phase) {
  return translate(c.base.robots().begin()->first, scaled(c.per_phase, phase));
}

}  // namespace

const PhaseSpec& phase_spec(BuiltinId algo) {
  static const PhaseSpec specs[] = {make_a1_fixed(), make_a1_modifiable(), make_a2_nolights()};
  return specs[static_cast<std::size_t>(algo)];
}

Configuration expected_configuration(BuiltinId algo, std::uint64_t phase) {
  Configuration out;
  for (const PhaseComponent& c : phase_spec(algo).components) {
    for (const auto& [p, col] : c.base.robots()) out.place(translate(p, scaled(c.per_phase, phase)), col);
  }
  return out;
}

PhaseMissing::PhaseMissing(std::uint64_t p)
    : std::runtime_error("phase " + std::to_string(p) + " never reached"), phase(p) {}

PhaseDetection detect_phases(const Trace& t, BuiltinId algo, std::uint64_t max_phase) {
  PhaseDetection d;
  std::size_t round = 0;
  for (std::uint64_t i = 0; i <= max_phase; ++i) {
    const Configuration want = expected_configuration(algo, i);
    while (round < t.configurations.size() && !(t.configurations[round] == want)) ++round;
    if (round == t.configurations.size()) throw PhaseMissing(i);
    d.rounds.push_back(round);
    ++round;
  }
  return d;
}

Trace run_until_phase(BuiltinId algo, std::uint64_t phases, std::uint64_t round_budget,
                      const AdversaryStrategy& adversary) {
  const CompiledRuleSet& rules = compiled_builtin(algo);
  Simulation sim(rules, rules.source().initial, adversary);
  std::uint64_t next = 0;
  Configuration want = expected_configuration(algo, next);
  while (true) {
    while (sim.current() == want) {
      if (next == phases) return sim.release();
      want = expected_configuration(algo, ++next);
    }
    if (sim.round() >= round_budget) throw PhaseMissing(next);
    sim.advance();
  }
}

std::vector<Position> expected_visited_boundary(BuiltinId algo, std::uint64_t phase) {
  const PhaseSpec& spec = phase_spec(algo);
  std::set<Position> nodes;
  const std::size_t n = spec.corners.size();
  for (std::size_t k = 0; k < n; ++k) {
    const Position a = corner_at(spec.corners[k], phase);
    const Position b = corner_at(spec.corners[(k + 1) % n], phase);
    const Offset d = b - a;
    const Coord g = std::gcd(std::llabs(d.x), std::llabs(d.y));
    if (g == 0) {
      nodes.insert(a);
      continue;
    }
    const Offset unit{d.x / g, d.y / g};
    for (Coord s = 0; s <= g; ++s) nodes.insert({a.x + unit.x * s, a.y + unit.y * s});
  }
  if (spec.includes_start_node && phase == 0) nodes.insert(spec.components.front().base.sorted().front().first);
  return {nodes.begin(), nodes.end()};
}

bool check_boundary_coverage(const Trace& t, BuiltinId algo, std::uint64_t phase, const PhaseDetection& phases) {
  if (phases.rounds.size() < phase + 2) {
    throw PreconditionViolation("phase " + std::to_string(phase + 1) +
                                " must be detected before checking coverage of phase " + std::to_string(phase));
  }
  const auto visited = visited_until(t, phases.rounds[phase + 1]);
  const auto boundary = expected_visited_boundary(algo, phase);
  return std::includes(visited.begin(), visited.end(), boundary.begin(), boundary.end());
}

bool check_boundary_coverage(const Trace& t, BuiltinId algo, std::uint64_t phase) {
  PhaseDetection phases;
  try {
    phases = detect_phases(t, algo, phase + 1);
  } catch (const PhaseMissing& e) {
    throw PreconditionViolation(std::string("trace too short: ") + e.what());
  }
  return check_boundary_coverage(t, algo, phase, phases);
}

BudgetExhausted::BudgetExhausted(std::uint64_t b, Position w)
    : std::runtime_error("node (" + std::to_string(w.x) + "," + std::to_string(w.y) + ") still unvisited after " +
                         std::to_string(b) + " rounds"),
      budget(b),
      witness(w) {}

std::uint64_t verify_radius_coverage(const CompiledRuleSet& rules, Coord radius, std::uint64_t round_budget,
                                     const AdversaryStrategy& adversary) {
  if (radius < 0) throw std::invalid_argument("radius must be non-negative");
  std::unordered_set<Position, PositionHash> uncovered;
  for (Coord x = -radius; x <= radius; ++x) {
    for (Coord y = -radius; y <= radius; ++y) uncovered.insert({x, y});
  }
  Simulation sim(rules, rules.source().initial, adversary, /*record_configurations=*/false);
  auto mark = [&](const Configuration& c) {
    for (const auto& [p, col] : c.robots()) uncovered.erase(p);
  };
  mark(sim.current());
  while (!uncovered.empty()) {
    if (sim.round() >= round_budget) {
      throw BudgetExhausted(round_budget, *std::min_element(uncovered.begin(), uncovered.end()));
    }
    mark(sim.advance());
  }
  return sim.round();
}

ExclusivenessCounts exclusiveness_audit(const Trace& t) {
  ExclusivenessCounts counts;
  for (const ViolationEvent& v : t.violations) {
    if (v.kind == ViolationEvent::Kind::NodeCollision) {
      ++counts.collisions;
    } else {
      ++counts.swaps;
    }
  }
  return counts;
}

std::vector<Coord> phase_max_distances(const Trace& t, const PhaseDetection& phases) {
  std::vector<Coord> out;
  for (std::size_t i = 0; i + 1 < phases.rounds.size(); ++i) {
    Coord best = 0;
    for (std::uint64_t r = phases.rounds[i]; r < phases.rounds[i + 1] && r < t.configurations.size(); ++r) {
      best = std::max(best, farthest_pair_distance(t.configurations[r]));
    }
    out.push_back(best);
  }
  return out;
}

bool distance_divergence(const Trace& t, const PhaseDetection& phases) {
  if (phases.rounds.size() < 3) throw PreconditionViolation("distance divergence needs at least three phases");
  const auto d = phase_max_distances(t, phases);
  for (std::size_t k = 0; k + 1 < d.size(); ++k) {
    if (d[k + 1] < d[k]) return false;
  }
  for (std::size_t k = 0; k + 2 < d.size(); ++k) {
    if (d[k + 2] <= d[k]) return false;
  }
  return d.back() > d.front();
}

}  // namespace ige
