#pragma once

// Fully synchronous Look-Compute-Move execution.

#include <cstdint>
#include <string>
#include <vector>

#include "ige/grid.hpp"
#include "ige/rules.hpp"

namespace ige {

// Chooses, for each robot and round, the rotation applied to its view before
// the rule lookup. Well-defined rule sets behave identically under all of them.
class AdversaryStrategy {
 public:
  enum class Kind : std::uint8_t { Identity, SeededRandom, PingPong };

  static AdversaryStrategy identity() { return {Kind::Identity, 0}; }
  static AdversaryStrategy seeded_random(std::uint64_t seed) { return {Kind::SeededRandom, seed}; }
  // Rotation 0 on even rounds, rotation 2 on odd rounds, for every robot.
  static AdversaryStrategy ping_pong() { return {Kind::PingPong, 0}; }

  Kind kind() const { return kind_; }
  std::uint64_t seed() const { return seed_; }

  Rotation rotation_for(std::uint64_t round, Position robot) const;

  // "identity", "pingpong" or "random:<seed>".
  std::string describe() const;

 private:
  AdversaryStrategy(Kind k, std::uint64_t seed) : kind_(k), seed_(seed) {}

  Kind kind_;
  std::uint64_t seed_;
};

struct ViolationEvent {
  enum class Kind : std::uint8_t { NodeCollision, EdgeSwap };

  std::uint64_t round = 0;  // round whose moves produced the event
  Kind kind = Kind::EdgeSwap;
  // Collision: the contested node only. Swap: the two endpoints, ordered.
  std::vector<Position> positions;

  friend bool operator==(const ViolationEvent&, const ViolationEvent&) = default;
};

const char* violation_name(ViolationEvent::Kind k);

class NodeCollision : public std::runtime_error {
 public:
  NodeCollision(std::uint64_t round, Position target);

  std::uint64_t round;
  Position target;
};

class UnknownColor : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct RobotMove {
  Position from;
  Position to;
  ColorId color = 0;  // color after the round
};

struct StepResult {
  Configuration next;
  std::vector<ViolationEvent> violations;
  std::vector<RobotMove> moves;  // one per robot, ordered by source position
};

// One synchronous round. Throws NodeCollision if two robots target one node
// and UnknownColor if a robot's color is outside the palette.
StepResult step(const CompiledRuleSet& rules, const Configuration& c, const AdversaryStrategy& adversary,
                std::uint64_t round);

struct TrackPoint {
  Position position;
  ColorId color = 0;

  friend bool operator==(const TrackPoint&, const TrackPoint&) = default;
};

struct Trace {
  std::string rule_set_name;
  std::vector<Configuration> configurations;  // configurations[k] is the state before round k
  std::vector<ViolationEvent> violations;
  // robot_tracks[id][k]: robot `id` at round k. Ids follow the sorted order of
  // the initial positions; robots are anonymous, so ids are presentation only.
  std::vector<std::vector<TrackPoint>> robot_tracks;

  std::uint64_t rounds() const { return configurations.empty() ? 0 : configurations.size() - 1; }
  const Configuration& last() const { return configurations.back(); }
};

// Error raised by run(): the underlying collision plus the trace so far.
class RunAborted : public std::runtime_error {
 public:
  RunAborted(const NodeCollision& cause, Trace partial);

  std::uint64_t round;
  Position target;
  Trace partial;
};

// Incremental execution that records a trace as it goes.
class Simulation {
 public:
  Simulation(const CompiledRuleSet& rules, Configuration initial, AdversaryStrategy adversary,
             bool record_configurations = true);

  // Executes one round; throws NodeCollision.
  const Configuration& advance();

  std::uint64_t round() const { return round_; }
  const Configuration& current() const { return current_; }
  const Trace& trace() const { return trace_; }
  Trace release() { return std::move(trace_); }

 private:
  const CompiledRuleSet& rules_;
  AdversaryStrategy adversary_;
  bool record_;
  std::uint64_t round_ = 0;
  Configuration current_;
  Trace trace_;
  std::unordered_map<Position, std::size_t, PositionHash> id_at_;
};

Trace run(const CompiledRuleSet& rules, std::uint64_t rounds, const AdversaryStrategy& adversary);
Trace run_from(const CompiledRuleSet& rules, const Configuration& initial, std::uint64_t rounds,
               const AdversaryStrategy& adversary);

// Every node occupied at some recorded round.
std::vector<Position> visited_set(const Trace& t);
// Nodes occupied at any round in [0, last_round].
std::vector<Position> visited_until(const Trace& t, std::uint64_t last_round);

}  // namespace ige
