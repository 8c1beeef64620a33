#pragma once

// Checks of the exploration algorithms against their closed-form phase
// structure: expected configurations, visited polygon boundaries,
// exclusiveness and the growth of the swarm's diameter.

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "ige/algorithms.hpp"
#include "ige/engine.hpp"

namespace ige {

// One part of a phase configuration: a set of robots translated by
// `per_phase` once per phase.
struct PhaseComponent {
  Configuration base;
  Translation per_phase;
};

struct PhaseSpec {
  BuiltinId algorithm = BuiltinId::A1Fixed;
  std::vector<PhaseComponent> components;  // moving group first, then beacons
  // Corners of the polygon whose boundary is swept during phase 0, and how
  // each corner moves per phase; corners are listed in boundary order.
  std::vector<PhaseComponent> corners;
  bool includes_start_node = false;  // a2_nolights also counts (3,2)
};

const PhaseSpec& phase_spec(BuiltinId algo);

Configuration expected_configuration(BuiltinId algo, std::uint64_t phase);

struct PhaseDetection {
  std::vector<std::uint64_t> rounds;  // rounds[i]: first round in configuration C^i

  std::uint64_t duration(std::size_t i) const { return rounds.at(i + 1) - rounds.at(i); }
};

class PhaseMissing : public std::runtime_error {
 public:
  explicit PhaseMissing(std::uint64_t phase);
  std::uint64_t phase;
};

class PreconditionViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Throws PhaseMissing for the first phase <= max_phase never reached.
PhaseDetection detect_phases(const Trace& t, BuiltinId algo, std::uint64_t max_phase);

// Runs a built-in until C^phases is reached, or throws PhaseMissing after
// `round_budget` rounds.
Trace run_until_phase(BuiltinId algo, std::uint64_t phases, std::uint64_t round_budget,
                      const AdversaryStrategy& adversary = AdversaryStrategy::identity());

// Lattice points on the closed boundary of the phase-`phase` polygon, sorted.
std::vector<Position> expected_visited_boundary(BuiltinId algo, std::uint64_t phase);

// True iff every boundary node of phase i was visited by the round at which
// phase i+1 starts. Throws PreconditionViolation if the trace ends before that.
bool check_boundary_coverage(const Trace& t, BuiltinId algo, std::uint64_t phase);
bool check_boundary_coverage(const Trace& t, BuiltinId algo, std::uint64_t phase, const PhaseDetection& phases);

class BudgetExhausted : public std::runtime_error {
 public:
  BudgetExhausted(std::uint64_t budget, Position witness);
  std::uint64_t budget;
  Position witness;  // an unvisited node of the target square
};

// First round at which every node of [-radius, radius]^2 has been visited.
std::uint64_t verify_radius_coverage(const CompiledRuleSet& rules, Coord radius, std::uint64_t round_budget,
                                     const AdversaryStrategy& adversary = AdversaryStrategy::identity());

struct ExclusivenessCounts {
  std::uint64_t collisions = 0;
  std::uint64_t swaps = 0;

  friend bool operator==(const ExclusivenessCounts&, const ExclusivenessCounts&) = default;
};

ExclusivenessCounts exclusiveness_audit(const Trace& t);

// Largest farthest-pair distance within each complete phase window
// [rounds[i], rounds[i+1]).
std::vector<Coord> phase_max_distances(const Trace& t, const PhaseDetection& phases);

// True iff the per-phase maximum distance never decreases and strictly
// increases over every two consecutive phases. Needs at least three detected
// phases; throws PreconditionViolation otherwise.
bool distance_divergence(const Trace& t, const PhaseDetection& phases);

}  // namespace ige
