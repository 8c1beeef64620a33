#include "ige/trace_file.hpp"

#include <charconv>
#include <map>
#include <sstream>

#include "ige/rule_file.hpp"

namespace ige {

namespace {

void write_records(std::ostringstream& out, const Trace& t, const Palette& colors) {
  std::size_t next_violation = 0;
  for (std::size_t round = 0; round < t.configurations.size(); ++round) {
    for (std::size_t id = 0; id < t.robot_tracks.size(); ++id) {
      const TrackPoint& tp = t.robot_tracks[id][round];
      out << round << '\t' << id << '\t' << tp.position.x << '\t' << tp.position.y << '\t'
          << colors.label(tp.color) << '\n';
    }
    while (next_violation < t.violations.size() && t.violations[next_violation].round == round) {
      const ViolationEvent& v = t.violations[next_violation++];
      out << v.round << '\t' << violation_name(v.kind);
      for (Position p : v.positions) out << '\t' << p.x << '\t' << p.y;
      out << '\n';
    }
  }
}

std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t tab = line.find('\t', start);
    out.push_back(line.substr(start, tab == std::string_view::npos ? std::string_view::npos : tab - start));
    if (tab == std::string_view::npos) break;
    start = tab + 1;
  }
  return out;
}

template <typename Int>
Int field(std::string_view s, std::size_t line, std::size_t column, const char* what) {
  Int v{};
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw ParseError(line, column, std::string("expected integer ") + what);
  }
  return v;
}

}  // namespace

std::string serialize_trace_records(const Trace& t, const Palette& colors) {
  std::ostringstream out;
  write_records(out, t, colors);
  return out.str();
}

std::string serialize_trace(const Trace& t, const Palette& colors, const TraceHeader& header) {
  std::ostringstream out;
  out << "# algorithm\t" << header.algorithm << '\n';
  out << "# phi\t" << header.phi << '\n';
  out << "# seed\t";
  if (header.seed) {
    out << *header.seed;
  } else {
    out << '-';
  }
  out << '\n';
  out << "# adversary\t" << header.adversary << '\n';
  out << "# columns\tround\trobot\tx\ty\tcolor\n";
  write_records(out, t, colors);
  return out.str();
}

ParsedTrace parse_trace(std::string_view text) {
  ParsedTrace result;
  std::vector<std::string> labels;
  std::map<std::uint64_t, std::size_t> frame_of_round;
  std::size_t number = 0;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++number;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;

    if (line.front() == '#') {
      auto fields = split_tabs(line.substr(1));
      std::string_view key = fields[0];
      while (!key.empty() && key.front() == ' ') key.remove_prefix(1);
      if (fields.size() < 2) continue;
      if (key == "algorithm") {
        result.header.algorithm = std::string(fields[1]);
      } else if (key == "phi") {
        result.header.phi = field<int>(fields[1], number, 1, "phi");
      } else if (key == "seed") {
        if (fields[1] != "-") result.header.seed = field<std::uint64_t>(fields[1], number, 1, "seed");
      } else if (key == "adversary") {
        result.header.adversary = std::string(fields[1]);
      }
      continue;
    }

    auto fields = split_tabs(line);
    std::vector<std::size_t> columns(fields.size(), 1);
    for (std::size_t i = 1; i < fields.size(); ++i) {
      columns[i] = columns[i - 1] + fields[i - 1].size() + 1;
    }
    const auto round = field<std::uint64_t>(fields[0], number, columns[0], "round");
    if (fields.size() < 2) throw ParseError(number, 1, "truncated record");

    if (fields[1] == "swap" || fields[1] == "collision") {
      ViolationEvent v;
      v.round = round;
      v.kind = fields[1] == "swap" ? ViolationEvent::Kind::EdgeSwap : ViolationEvent::Kind::NodeCollision;
      if (fields.size() % 2 != 0 || fields.size() < 4) throw ParseError(number, 1, "violation needs coordinate pairs");
      for (std::size_t i = 2; i + 1 < fields.size(); i += 2) {
        v.positions.push_back({field<Coord>(fields[i], number, columns[i], "x"),
                               field<Coord>(fields[i + 1], number, columns[i + 1], "y")});
      }
      result.violations.push_back(std::move(v));
      continue;
    }

    if (fields.size() != 5) throw ParseError(number, 1, "robot records have 5 fields");
    field<std::uint64_t>(fields[1], number, columns[1], "robot id");
    const Position p{field<Coord>(fields[2], number, columns[2], "x"),
                     field<Coord>(fields[3], number, columns[3], "y")};
    const std::string label(fields[4]);
    if (label.empty()) throw ParseError(number, columns[4], "empty color label");
    std::size_t color = 0;
    while (color < labels.size() && labels[color] != label) ++color;
    if (color == labels.size()) {
      if (labels.size() == 256) throw ParseError(number, columns[4], "too many colors");
      labels.push_back(label);
    }

    auto [it, inserted] = frame_of_round.emplace(round, result.frames.size());
    if (inserted) {
      if (!result.frames.empty() && result.frames.back().round > round) {
        throw ParseError(number, columns[0], "records out of round order");
      }
      result.frames.push_back({round, {}});
    }
    TraceFrame& frame = result.frames[it->second];
    if (frame.configuration.occupied(p)) throw ParseError(number, columns[2], "two robots on one node");
    frame.configuration.place(p, static_cast<ColorId>(color));
  }
  result.colors = Palette(std::move(labels));
  return result;
}

}  // namespace ige
