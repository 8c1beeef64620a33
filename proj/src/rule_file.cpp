#include "ige/rule_file.hpp"

#include <charconv>
#include <cstdlib>
#include <sstream>
#include <vector>

namespace ige {

ParseError::ParseError(std::size_t l, std::size_t c, const std::string& message)
    : std::runtime_error("line " + std::to_string(l) + ", column " + std::to_string(c) + ": " + message),
      line(l),
      column(c) {}

namespace {

struct Token {
  std::string_view text;
  std::size_t line;
  std::size_t column;  // 1-based
};

struct Line {
  std::size_t number;
  std::vector<Token> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(start, end - start);
    ++number;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && (raw[i] == ' ' || raw[i] == '\t' || raw[i] == '\r')) ++i;
      std::size_t j = i;
      while (j < raw.size() && raw[j] != ' ' && raw[j] != '\t' && raw[j] != '\r') ++j;
      if (j > i) line.tokens.push_back({raw.substr(i, j - i), number, i + 1});
      i = j;
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    if (end == text.size()) break;
    start = end + 1;
  }
  return lines;
}

template <typename Int>
bool to_int(std::string_view s, Int& out) {
  const char* first = s.data();
  const char* last = s.data() + s.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : lines_(tokenize(text)) {}

  RuleSet parse() {
    RuleSet rs;
    bool have_name = false, have_phi = false, have_colors = false, have_lights = false;

    while (pos_ < lines_.size()) {
      const Line& line = lines_[pos_];
      const Token& key = line.tokens[0];
      if (key.text == "init" || key.text == "rule") break;
      ++pos_;
      if (key.text == "name") {
        expect_count(line, 2);
        rs.name = std::string(line.tokens[1].text);
        have_name = true;
      } else if (key.text == "phi") {
        expect_count(line, 2);
        if (!to_int(line.tokens[1].text, rs.phi) || rs.phi < 1 || rs.phi > 16) {
          fail(line.tokens[1], "phi must be an integer in 1..16");
        }
        have_phi = true;
      } else if (key.text == "colors") {
        if (line.tokens.size() < 2) fail(key, "at least one color label expected");
        std::vector<std::string> labels;
        for (std::size_t i = 1; i < line.tokens.size(); ++i) {
          const Token& t = line.tokens[i];
          if (t.text == "." || t.text == "x") fail(t, "'" + std::string(t.text) + "' is reserved");
          for (const auto& seen : labels) {
            if (seen == t.text) fail(t, "duplicate color label '" + seen + "'");
          }
          labels.emplace_back(t.text);
        }
        rs.colors = Palette(std::move(labels));
        have_colors = true;
      } else if (key.text == "lights") {
        expect_count(line, 2);
        if (line.tokens[1].text == "fixed") {
          rs.lights_modifiable = false;
        } else if (line.tokens[1].text == "modifiable") {
          rs.lights_modifiable = true;
        } else {
          fail(line.tokens[1], "expected 'fixed' or 'modifiable'");
        }
        have_lights = true;
      } else {
        fail(key, "unknown header key '" + std::string(key.text) + "'");
      }
    }

    const Token here = pos_ < lines_.size() ? lines_[pos_].tokens[0] : Token{"", last_line(), 1};
    auto missing = [&](const char* what) { fail(here, std::string("missing header '") + what + "'"); };
    if (!have_name) missing("name");
    if (!have_phi) missing("phi");
    if (!have_colors) missing("colors");
    if (!have_lights) missing("lights");

    bool seen_init = false;
    while (pos_ < lines_.size()) {
      const Line& line = lines_[pos_];
      const Token& key = line.tokens[0];
      if (key.text == "init") {
        if (seen_init) fail(key, "duplicate init block");
        expect_count(line, 1);
        seen_init = true;
        ++pos_;
        parse_init(rs);
      } else if (key.text == "rule") {
        ++pos_;
        rs.rules.push_back(parse_rule(rs, line));
      } else {
        fail(key, "expected 'init' or 'rule'");
      }
    }
    return rs;
  }

 private:
  [[noreturn]] void fail(const Token& t, const std::string& message) const {
    throw ParseError(t.line, t.column, message);
  }

  std::size_t last_line() const { return lines_.empty() ? 1 : lines_.back().number; }

  void expect_count(const Line& line, std::size_t n) const {
    if (line.tokens.size() != n) {
      const Token& t = line.tokens.size() > n ? line.tokens[n] : line.tokens.back();
      throw ParseError(line.number, t.column,
                       "'" + std::string(line.tokens[0].text) + "' takes " + std::to_string(n - 1) +
                           " argument(s), got " + std::to_string(line.tokens.size() - 1));
    }
  }

  ColorId color(const RuleSet& rs, const Token& t) const {
    ColorId id = 0;
    if (!rs.colors.find(t.text, id)) fail(t, "unknown color label '" + std::string(t.text) + "'");
    return id;
  }

  void parse_init(RuleSet& rs) {
    while (pos_ < lines_.size()) {
      const Line& line = lines_[pos_];
      if (line.tokens[0].text == "rule" || line.tokens[0].text == "init") return;
      ++pos_;
      if (line.tokens.size() != 3) {
        throw ParseError(line.number, line.tokens[0].column, "init entries are 'x y color'");
      }
      Position p;
      if (!to_int(line.tokens[0].text, p.x)) fail(line.tokens[0], "x must be an integer");
      if (!to_int(line.tokens[1].text, p.y)) fail(line.tokens[1], "y must be an integer");
      const ColorId c = color(rs, line.tokens[2]);
      if (rs.initial.occupied(p)) fail(line.tokens[0], "node already occupied in init");
      rs.initial.place(p, c);
    }
  }

  Rule parse_rule(const RuleSet& rs, const Line& directive) {
    Rule rule;
    bool have_move = false;
    for (std::size_t i = 1; i < directive.tokens.size(); ++i) {
      const Token& t = directive.tokens[i];
      const auto eq = t.text.find('=');
      if (eq == std::string_view::npos) fail(t, "expected key=value");
      const std::string_view k = t.text.substr(0, eq);
      const std::string_view v = t.text.substr(eq + 1);
      if (k == "move") {
        if (have_move) fail(t, "duplicate move");
        if (!parse_move(v, rule.move)) fail(t, "move must be up, down, left, right or idle");
        have_move = true;
      } else if (k == "color") {
        if (rule.new_color) fail(t, "duplicate color");
        ColorId id = 0;
        if (!rs.colors.find(v, id)) fail(t, "unknown color label '" + std::string(v) + "'");
        rule.new_color = id;
      } else {
        fail(t, "unknown rule attribute '" + std::string(k) + "'");
      }
    }
    if (!have_move) fail(directive.tokens[0], "rule needs move=<direction>");

    rule.pattern.phi = rs.phi;
    rule.pattern.cells.assign(ball_size(rs.phi), PatternCell::empty());
    const auto& offsets = ball_offsets(rs.phi);
    std::size_t cell = 0;
    for (int y = rs.phi; y >= -rs.phi; --y) {
      if (pos_ >= lines_.size()) {
        throw ParseError(last_line(), 1, "rule pattern ends early: expected " +
                                             std::to_string(2 * rs.phi + 1) + " rows");
      }
      const Line& row = lines_[pos_];
      if (row.tokens[0].text == "rule" || row.tokens[0].text == "init") {
        fail(row.tokens[0], "rule pattern ends early: expected " + std::to_string(2 * rs.phi + 1) + " rows");
      }
      ++pos_;
      const std::size_t width = static_cast<std::size_t>(2 * (rs.phi - std::abs(y)) + 1);
      if (row.tokens.size() != width) {
        const Token& t = row.tokens.size() > width ? row.tokens[width] : row.tokens.back();
        fail(t, "pattern row at y=" + std::to_string(y) + " needs " + std::to_string(width) + " cells, got " +
                    std::to_string(row.tokens.size()));
      }
      for (const Token& t : row.tokens) {
        PatternCell pc;
        if (t.text == ".") {
          pc = PatternCell::empty();
        } else if (t.text == "x") {
          pc = PatternCell::dont_care();
        } else {
          pc = PatternCell::occupied(color(rs, t));
        }
        if (offsets[cell] == Offset{0, 0} && !pc.is_occupied()) fail(t, "center cell must be a color label");
        rule.pattern.cells[cell++] = pc;
      }
    }
    if (rule.new_color && !rs.lights_modifiable) {
      fail(directive.tokens[0], "color change in a rule set with fixed lights");
    }
    return rule;
  }

  std::vector<Line> lines_;
  std::size_t pos_ = 0;
};

}  // namespace

RuleSet parse_rule_file(std::string_view text) { return Parser(text).parse(); }

std::string serialize_rule_file(const RuleSet& rs) {
  std::ostringstream out;
  out << "name " << rs.name << '\n';
  out << "phi " << rs.phi << '\n';
  out << "colors";
  for (const auto& label : rs.colors.labels()) out << ' ' << label;
  out << '\n';
  out << "lights " << (rs.lights_modifiable ? "modifiable" : "fixed") << '\n';
  out << "init\n";
  for (const auto& [p, c] : rs.initial.sorted()) out << p.x << ' ' << p.y << ' ' << rs.colors.label(c) << '\n';
  for (const Rule& rule : rs.rules) {
    out << "rule move=" << move_name(rule.move);
    if (rule.new_color) out << " color=" << rs.colors.label(*rule.new_color);
    out << '\n';
    std::size_t cell = 0;
    for (int y = rs.phi; y >= -rs.phi; --y) {
      const int half = rs.phi - std::abs(y);
      out << std::string(static_cast<std::size_t>(2 * (rs.phi - half)), ' ');
      for (int x = -half; x <= half; ++x) {
        const PatternCell& pc = rule.pattern.cells[cell++];
        if (x > -half) out << ' ';
        switch (pc.kind) {
          case PatternCell::Kind::MustBeEmpty: out << '.'; break;
          case PatternCell::Kind::DontCare: out << 'x'; break;
          case PatternCell::Kind::MustBeOccupied: out << rs.colors.label(pc.color); break;
        }
      }
      out << '\n';
    }
  }
  return out.str();
}

}  // namespace ige
