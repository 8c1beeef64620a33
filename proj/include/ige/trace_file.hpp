#pragma once

// Tab-separated trace format.
//
//   # algorithm<TAB>a1_fixed
//   # phi<TAB>1
//   # seed<TAB>-
//   # adversary<TAB>identity
//   # columns<TAB>round<TAB>robot<TAB>x<TAB>y<TAB>color
//   0<TAB>0<TAB>-2<TAB>1<TAB>B
//   ...
//   7<TAB>swap<TAB>0<TAB>1<TAB>1<TAB>1
//
// Robot records are sorted by (round, robot id). A violation record carries
// the round whose moves caused it and follows that round's robot records.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ige/engine.hpp"

namespace ige {

struct TraceHeader {
  std::string algorithm;
  int phi = 1;
  std::optional<std::uint64_t> seed;
  std::string adversary = "identity";
};

std::string serialize_trace(const Trace& t, const Palette& colors, const TraceHeader& header);
// The record lines only (no '#' header); equal across adversaries for
// well-defined rule sets.
std::string serialize_trace_records(const Trace& t, const Palette& colors);

struct TraceFrame {
  std::uint64_t round = 0;
  Configuration configuration;
};

struct ParsedTrace {
  TraceHeader header;
  Palette colors;  // labels in order of first appearance
  std::vector<TraceFrame> frames;
  std::vector<ViolationEvent> violations;
};

// Throws ParseError (see rule_file.hpp) on malformed input.
ParsedTrace parse_trace(std::string_view text);

}  // namespace ige
