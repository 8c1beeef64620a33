#include "ige/algorithms.hpp"

#include <memory>
#include <mutex>

#include "ige/rule_file.hpp"

namespace ige {

namespace detail {
extern const std::string_view k_rules_a1_fixed;
extern const std::string_view k_rules_a1_modifiable;
extern const std::string_view k_rules_a2_nolights;
}  // namespace detail

std::string_view builtin_name(BuiltinId id) {
  switch (id) {
    case BuiltinId::A1Fixed: return "a1_fixed";
    case BuiltinId::A1Modifiable: return "a1_modifiable";
    case BuiltinId::A2NoLights: return "a2_nolights";
  }
  return "?";
}

std::optional<BuiltinId> parse_builtin_name(std::string_view name) {
  for (BuiltinId id : kAllBuiltins) {
    if (builtin_name(id) == name) return id;
  }
  return std::nullopt;
}

std::string_view builtin_rule_text(BuiltinId id) {
  switch (id) {
    case BuiltinId::A1Fixed: return detail::k_rules_a1_fixed;
    case BuiltinId::A1Modifiable: return detail::k_rules_a1_modifiable;
    case BuiltinId::A2NoLights: return detail::k_rules_a2_nolights;
  }
  return {};
}

RuleSet builtin(BuiltinId id) { return parse_rule_file(builtin_rule_text(id)); }

const CompiledRuleSet& compiled_builtin(BuiltinId id) {
  static std::once_flag once[kAllBuiltins.size()];
  static std::unique_ptr<CompiledRuleSet> cache[kAllBuiltins.size()];
  const auto slot = static_cast<std::size_t>(id);
  std::call_once(once[slot], [&] { cache[slot] = std::make_unique<CompiledRuleSet>(builtin(id)); });
  return *cache[slot];
}

}  // namespace ige
