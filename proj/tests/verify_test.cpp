#include <gtest/gtest.h>

#include <set>

#include "ige/algorithms.hpp"
#include "ige/verify.hpp"
#include "support/controls.hpp"
#include "support/oracles.hpp"

namespace ige {
namespace {

// Start rounds of phases 0..10 under the identity adversary, measured once
// and pinned here as regressions.
const std::vector<std::uint64_t> kA1FixedRounds = {0, 14, 36, 66, 104, 150, 204, 266, 336, 414, 500};
const std::vector<std::uint64_t> kA1ModRounds = {0, 15, 42, 81, 132, 195, 270, 357, 456, 567, 690};
const std::vector<std::uint64_t> kA2Rounds = {0, 16, 40, 72, 112, 160, 216, 280, 352, 432, 520};

const Trace& trace_of(BuiltinId id) {
  static const Trace traces[] = {run_until_phase(BuiltinId::A1Fixed, 10, 5000),
                                 run_until_phase(BuiltinId::A1Modifiable, 10, 5000),
                                 run_until_phase(BuiltinId::A2NoLights, 10, 5000)};
  return traces[static_cast<std::size_t>(id)];
}

TEST(Phases, ZeroIsTheInitialConfiguration) {
  for (BuiltinId id : kAllBuiltins) EXPECT_EQ(expected_configuration(id, 0), builtin(id).initial);
}

TEST(Phases, FirstPhaseConfigurations) {
  EXPECT_EQ(expected_configuration(BuiltinId::A2NoLights, 1),
            (Configuration{{{4, 3}, 0}, {{4, 4}, 0}, {{5, 4}, 0}, {{-1, -1}, 0}, {{6, -2}, 0}, {{6, 5}, 0}, {{0, 6}, 0}}));
  const ColorId R = 0, Y = 1, G = 2, B = 3;
  EXPECT_EQ(expected_configuration(BuiltinId::A1Modifiable, 1),
            (Configuration{{{-1, 0}, B}, {{-1, -1}, Y}, {{-2, 1}, G}, {{4, -5}, Y}, {{3, 2}, R}}));
  const ColorId L = 0, F = 1, Bf = 2;
  EXPECT_EQ(expected_configuration(BuiltinId::A1Fixed, 2),
            (Configuration{{{-2, -2}, L}, {{-3, -2}, F}, {{-2, -3}, Bf}, {{4, -2}, Bf}, {{3, 4}, Bf}, {{-4, 3}, Bf}}));
}

TEST(Phases, DetectedRounds) {
  EXPECT_EQ(detect_phases(trace_of(BuiltinId::A1Fixed), BuiltinId::A1Fixed, 10).rounds, kA1FixedRounds);
  EXPECT_EQ(detect_phases(trace_of(BuiltinId::A1Modifiable), BuiltinId::A1Modifiable, 10).rounds, kA1ModRounds);
  EXPECT_EQ(detect_phases(trace_of(BuiltinId::A2NoLights), BuiltinId::A2NoLights, 10).rounds, kA2Rounds);
}

TEST(Phases, A1FixedDurationsGrowLinearly) {
  const auto d = detect_phases(trace_of(BuiltinId::A1Fixed), BuiltinId::A1Fixed, 10);
  for (std::size_t i = 0; i < 10; ++i) EXPECT_EQ(d.duration(i), 14 + 8 * i);
}

TEST(Phases, OtherDurations) {
  const auto m = detect_phases(trace_of(BuiltinId::A1Modifiable), BuiltinId::A1Modifiable, 10);
  const auto n = detect_phases(trace_of(BuiltinId::A2NoLights), BuiltinId::A2NoLights, 10);
  for (std::size_t i = 0; i < 10; ++i) {
    EXPECT_EQ(m.duration(i), 15 + 12 * i);
    EXPECT_EQ(n.duration(i), 16 + 8 * i);
  }
}

TEST(Phases, MissingPhaseThrows) {
  Trace t = trace_of(BuiltinId::A1Fixed);
  t.configurations.resize(100);
  try {
    detect_phases(t, BuiltinId::A1Fixed, 10);
    FAIL();
  } catch (const PhaseMissing& e) {
    EXPECT_EQ(e.phase, 4u);
  }
  EXPECT_THROW(run_until_phase(BuiltinId::A1Fixed, 10, 300), PhaseMissing);
}

TEST(Boundary, A1FixedFirstRectangle) {
  const auto b = expected_visited_boundary(BuiltinId::A1Fixed, 0);
  EXPECT_EQ(b.size(), 6u);
  std::vector<Position> rect;
  for (Coord x = -1; x <= 1; ++x) {
    for (Coord y = 0; y <= 1; ++y) {
      if (testing::on_rectangle({x, y}, -1, 0, 1, 1)) rect.push_back({x, y});
    }
  }
  EXPECT_EQ(b, rect);
}

TEST(Boundary, A2FirstSquarePlusStart) {
  const auto b = expected_visited_boundary(BuiltinId::A2NoLights, 0);
  EXPECT_EQ(b.size(), 9u);
  EXPECT_TRUE(std::binary_search(b.begin(), b.end(), Position{3, 2}));
  EXPECT_EQ(expected_visited_boundary(BuiltinId::A2NoLights, 1).size(), 16u);
}

TEST(Boundary, MatchesLevelOracle) {
  for (BuiltinId id : kAllBuiltins) {
    for (Coord i = 0; i <= 12; ++i) {
      EXPECT_EQ(expected_visited_boundary(id, static_cast<std::uint64_t>(i)), testing::oracle_boundary(id, i))
          << builtin_name(id) << " phase " << i;
    }
  }
}

TEST(Boundary, TriangleHasItsCorners) {
  const auto b = expected_visited_boundary(BuiltinId::A1Modifiable, 3);
  for (Position p : {Position{-6, 3}, Position{5, -8}, Position{5, 3}}) {
    EXPECT_TRUE(std::binary_search(b.begin(), b.end(), p));
  }
}

TEST(Boundary, ConsecutiveBoundariesAreDisjoint) {
  for (BuiltinId id : kAllBuiltins) {
    for (std::uint64_t i = 0; i < 10; ++i) {
      const auto a = expected_visited_boundary(id, i);
      const auto b = expected_visited_boundary(id, i + 1);
      std::vector<Position> both;
      std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(both));
      EXPECT_TRUE(both.empty()) << builtin_name(id) << " " << i;
    }
  }
}

TEST(Boundary, RingsTileTheWindow) {
  // Phases 0..9 together cover every node within the phase-9 polygon.
  for (BuiltinId id : kAllBuiltins) {
    std::set<Position> all;
    for (std::uint64_t i = 0; i < 10; ++i) {
      for (Position p : expected_visited_boundary(id, i)) all.insert(p);
    }
    for (Coord x = -20; x <= 20; ++x) {
      for (Coord y = -20; y <= 20; ++y) {
        const Position p{x, y};
        const Coord level = testing::level_of(id, p);
        const bool inside_first = level < 0 && !(id == BuiltinId::A2NoLights && p == Position{3, 2});
        if (level <= 9 && !inside_first) {
          EXPECT_TRUE(all.count(p)) << builtin_name(id) << " " << x << "," << y;
        }
      }
    }
  }
}

TEST(Coverage, BoundariesVisitedEachPhase) {
  for (BuiltinId id : kAllBuiltins) {
    const Trace& t = trace_of(id);
    const auto d = detect_phases(t, id, 10);
    for (std::uint64_t i = 0; i < 10; ++i) {
      EXPECT_TRUE(check_boundary_coverage(t, id, i, d)) << builtin_name(id) << " " << i;
      EXPECT_TRUE(check_boundary_coverage(t, id, i));
    }
  }
}

TEST(Coverage, NotVisitedBeforePhaseEnds) {
  // Cut the trace one round before phase 1 starts: some node of the first
  // rectangle is still unvisited.
  const Trace& full = trace_of(BuiltinId::A1Fixed);
  const auto d = detect_phases(full, BuiltinId::A1Fixed, 10);
  PhaseDetection early = d;
  early.rounds[1] = 1;
  EXPECT_FALSE(check_boundary_coverage(full, BuiltinId::A1Fixed, 0, early));
}

TEST(Coverage, TruncatedTraceIsAPreconditionViolation) {
  Trace t = trace_of(BuiltinId::A1Fixed);
  t.configurations.resize(50);
  EXPECT_THROW(check_boundary_coverage(t, BuiltinId::A1Fixed, 5), PreconditionViolation);
  const auto d = detect_phases(t, BuiltinId::A1Fixed, 2);
  EXPECT_THROW(check_boundary_coverage(t, BuiltinId::A1Fixed, 2, d), PreconditionViolation);
}

TEST(Coverage, MutatedRuleSetFails) {
  for (std::size_t drop = 0; drop < 6; ++drop) {
    RuleSet rs = builtin(BuiltinId::A1Fixed);
    rs.rules.erase(rs.rules.begin() + static_cast<std::ptrdiff_t>(drop));
    const CompiledRuleSet rules(rs);
    bool failed = false;
    try {
      const Trace t = run(rules, 600, AdversaryStrategy::identity());
      const auto d = detect_phases(t, BuiltinId::A1Fixed, 3);
      for (std::uint64_t i = 0; i < 3; ++i) failed = failed || !check_boundary_coverage(t, BuiltinId::A1Fixed, i, d);
    } catch (const PhaseMissing&) {
      failed = true;
    } catch (const RunAborted&) {
      failed = true;
    }
    EXPECT_TRUE(failed) << "dropped rule " << drop;
  }
}

TEST(RadiusCoverage, RadiusZero) {
  EXPECT_EQ(verify_radius_coverage(compiled_builtin(BuiltinId::A1Fixed), 0, 10), 0u);
  EXPECT_EQ(verify_radius_coverage(compiled_builtin(BuiltinId::A1Modifiable), 0, 10), 0u);
  EXPECT_EQ(verify_radius_coverage(compiled_builtin(BuiltinId::A2NoLights), 0, 10), 0u);  // (0,0) starts occupied
  EXPECT_GT(verify_radius_coverage(compiled_builtin(BuiltinId::A1Fixed), 1, 1000), 0u);
  EXPECT_THROW(verify_radius_coverage(compiled_builtin(BuiltinId::A1Fixed), -1, 10), std::invalid_argument);
}

TEST(RadiusCoverage, LoneRobotNeverCovers) {
  RuleSet rs = builtin(BuiltinId::A1Fixed);
  rs.initial = Configuration{{{0, 0}, 0}};
  const CompiledRuleSet rules(rs);
  try {
    verify_radius_coverage(rules, 1, 50);
    FAIL();
  } catch (const BudgetExhausted& e) {
    EXPECT_EQ(e.budget, 50u);
    EXPECT_EQ(e.witness, (Position{-1, -1}));
  }
}

TEST(RadiusCoverage, A2WithinPhaseBudget) {
  // [-15,15]^2 lies inside the phase-17 square; that phase ends when 18 starts.
  Coord phase = 0;
  for (Coord x = -15; x <= 15; ++x) {
    for (Coord y = -15; y <= 15; ++y) phase = std::max(phase, testing::level_a2_nolights({x, y}));
  }
  EXPECT_EQ(phase, 17);
  std::uint64_t budget = 0;
  for (Coord i = 0; i <= phase; ++i) budget += 16 + 8 * static_cast<std::uint64_t>(i);
  const auto round = verify_radius_coverage(compiled_builtin(BuiltinId::A2NoLights), 15, budget);
  EXPECT_LE(round, budget);
  EXPECT_EQ(round, 1285u);
}

TEST(Audit, Counts) {
  const auto fixed = exclusiveness_audit(trace_of(BuiltinId::A1Fixed));
  EXPECT_EQ(fixed.collisions, 0u);
  EXPECT_GE(fixed.swaps, 1u);
  EXPECT_EQ(fixed.swaps, 40u);  // four per phase

  EXPECT_EQ(exclusiveness_audit(trace_of(BuiltinId::A2NoLights)), (ExclusivenessCounts{0, 0}));

  // The turn at the R beacon reuses the fixed-color swap, once per phase.
  EXPECT_EQ(exclusiveness_audit(trace_of(BuiltinId::A1Modifiable)), (ExclusivenessCounts{0, 10}));
}

TEST(Divergence, BuiltinsDiverge) {
  for (BuiltinId id : kAllBuiltins) {
    const Trace& t = trace_of(id);
    const auto d = detect_phases(t, id, 10);
    EXPECT_TRUE(distance_divergence(t, d)) << builtin_name(id);
    const auto m = phase_max_distances(t, d);
    ASSERT_EQ(m.size(), 10u);
    // Max distance within a window, recomputed pairwise.
    for (std::size_t i = 0; i < m.size(); ++i) {
      Coord best = 0;
      for (std::uint64_t r = d.rounds[i]; r < d.rounds[i + 1]; ++r) {
        best = std::max(best, testing::brute_farthest_pair(testing::positions_of(t.configurations[r])));
      }
      EXPECT_EQ(m[i], best);
    }
  }
}

TEST(Divergence, FrozenControl) {
  const CompiledRuleSet rules(testing::frozen(BuiltinId::A1Fixed));
  const Trace t = run(rules, 100, AdversaryStrategy::identity());
  PhaseDetection fake;
  for (std::uint64_t r = 0; r <= 100; r += 10) fake.rounds.push_back(r);
  EXPECT_FALSE(distance_divergence(t, fake));
}

TEST(Divergence, PingPongControl) {
  const CompiledRuleSet rules(testing::all_empty_mover());
  const Trace t = run_from(rules, Configuration{{{0, 0}, 0}}, 100, AdversaryStrategy::ping_pong());
  PhaseDetection fake;
  for (std::uint64_t r = 0; r <= 100; r += 10) fake.rounds.push_back(r);
  EXPECT_FALSE(distance_divergence(t, fake));
}

TEST(Divergence, NeedsThreePhases) {
  const Trace& t = trace_of(BuiltinId::A1Fixed);
  PhaseDetection two;
  two.rounds = {0, 14};
  EXPECT_THROW(distance_divergence(t, two), PreconditionViolation);
}

}  // namespace
}  // namespace ige
