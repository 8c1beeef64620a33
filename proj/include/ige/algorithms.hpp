#pragma once

// The three built-in exploration algorithms. Their rule tables ship as rule
// files under data/rules and are compiled into the library.

#include <array>
#include <optional>
#include <string_view>

#include "ige/rules.hpp"

namespace ige {

enum class BuiltinId { A1Fixed, A1Modifiable, A2NoLights };

inline constexpr std::array<BuiltinId, 3> kAllBuiltins = {BuiltinId::A1Fixed, BuiltinId::A1Modifiable,
                                                         BuiltinId::A2NoLights};

std::string_view builtin_name(BuiltinId id);  // "a1_fixed", ...
std::optional<BuiltinId> parse_builtin_name(std::string_view name);

std::string_view builtin_rule_text(BuiltinId id);
RuleSet builtin(BuiltinId id);
// Shared, lazily built compiled form.
const CompiledRuleSet& compiled_builtin(BuiltinId id);

}  // namespace ige
