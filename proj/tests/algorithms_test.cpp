#include <gtest/gtest.h>

#include "ige/algorithms.hpp"
#include "ige/rule_file.hpp"
#include "ige/rules.hpp"

namespace ige {
namespace {

TEST(Builtins, Names) {
  EXPECT_EQ(builtin_name(BuiltinId::A1Fixed), "a1_fixed");
  EXPECT_EQ(parse_builtin_name("a2_nolights"), BuiltinId::A2NoLights);
  EXPECT_EQ(parse_builtin_name("a3"), std::nullopt);
  for (BuiltinId id : kAllBuiltins) EXPECT_EQ(builtin(id).name, builtin_name(id));
}

TEST(Builtins, Shapes) {
  const RuleSet a = builtin(BuiltinId::A1Fixed);
  EXPECT_EQ(a.initial.size(), 6u);
  EXPECT_EQ(a.colors.size(), 3u);
  EXPECT_EQ(a.phi, 1);
  EXPECT_FALSE(a.lights_modifiable);

  const RuleSet b = builtin(BuiltinId::A1Modifiable);
  EXPECT_EQ(b.initial.size(), 5u);
  EXPECT_EQ(b.colors.size(), 5u);
  EXPECT_EQ(b.phi, 1);
  EXPECT_TRUE(b.lights_modifiable);

  const RuleSet c = builtin(BuiltinId::A2NoLights);
  EXPECT_EQ(c.initial.size(), 7u);
  EXPECT_EQ(c.colors.size(), 1u);
  EXPECT_EQ(c.phi, 2);
  EXPECT_FALSE(c.lights_modifiable);
}

TEST(Builtins, InitialConfigurations) {
  const ColorId L = 0, F = 1, B = 2;
  EXPECT_EQ(builtin(BuiltinId::A1Fixed).initial,
            (Configuration{{{0, 0}, L}, {{-1, 0}, F}, {{0, -1}, B}, {{2, 0}, B}, {{1, 2}, B}, {{-2, 1}, B}}));
  const ColorId R = 0, Y = 1, G = 2, Bm = 3;
  EXPECT_EQ(builtin(BuiltinId::A1Modifiable).initial,
            (Configuration{{{0, 0}, G}, {{1, -1}, Bm}, {{1, -2}, Y}, {{3, -3}, Y}, {{2, 1}, R}}));
  EXPECT_EQ(builtin(BuiltinId::A2NoLights).initial,
            (Configuration{{{3, 2}, 0}, {{3, 3}, 0}, {{4, 3}, 0}, {{0, 0}, 0}, {{5, -1}, 0}, {{5, 4}, 0}, {{1, 5}, 0}}));
}

TEST(Builtins, RuleCounts) {
  EXPECT_EQ(builtin(BuiltinId::A1Fixed).rules.size(), 6u);
  EXPECT_EQ(builtin(BuiltinId::A1Modifiable).rules.size(), 22u);
  EXPECT_EQ(builtin(BuiltinId::A2NoLights).rules.size(), 7u);
}

TEST(Builtins, SerializeRoundTrip) {
  for (BuiltinId id : kAllBuiltins) {
    const RuleSet rs = builtin(id);
    const std::string text = serialize_rule_file(rs);
    EXPECT_EQ(parse_rule_file(text), rs) << builtin_name(id);
    EXPECT_EQ(serialize_rule_file(parse_rule_file(text)), text);
  }
}

TEST(Builtins, HiddenCellsAlreadyDontCare) {
  const RuleSet rs = builtin(BuiltinId::A2NoLights);
  for (const Rule& r : rs.rules) EXPECT_EQ(normalize_pattern(r.pattern).second, 0u);
  EXPECT_TRUE(validate(rs).normalization_warnings.empty());
}

TEST(Builtins, CompiledIsShared) {
  EXPECT_EQ(&compiled_builtin(BuiltinId::A1Fixed), &compiled_builtin(BuiltinId::A1Fixed));
  EXPECT_EQ(compiled_builtin(BuiltinId::A1Modifiable).expanded().size(), 88u);
}

}  // namespace
}  // namespace ige
