#pragma once

// Text format for rule sets.
//
//   name a1_fixed
//   phi 1
//   colors L F B
//   lights fixed
//   init
//   -1 0 F
//   0 0 L
//   rule move=up
//     .
//   . L F
//     .
//
// Each rule directive is followed by 2*phi+1 pattern rows, North to South.
// Row k lists the ball cells of that y-level West to East. Tokens: `.` must be
// empty, a color label must hold a robot of that color, `x` is don't-care.
// `#` starts a comment.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "ige/rules.hpp"

namespace ige {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message);

  std::size_t line;
  std::size_t column;
};

// Structural parse; semantic checks (validate) are a separate step.
RuleSet parse_rule_file(std::string_view text);
std::string serialize_rule_file(const RuleSet& rs);

}  // namespace ige
