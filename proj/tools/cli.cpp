#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <unordered_set>

#include "ige/algorithms.hpp"
#include "ige/render.hpp"
#include "ige/rule_file.hpp"
#include "ige/trace_file.hpp"
#include "ige/verify.hpp"

namespace ige::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file_atomic(const std::string& path, const std::string& contents) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write '" + tmp + "'");
    out << contents;
    if (!out.flush()) throw std::runtime_error("write to '" + tmp + "' failed");
  }
  std::filesystem::rename(tmp, path);
}

struct Source {
  RuleSet rules;
  std::optional<BuiltinId> builtin;
};

Source load_source(const std::string& source) {
  constexpr std::string_view prefix = "builtin:";
  if (source.rfind(prefix, 0) == 0) {
    auto id = parse_builtin_name(std::string_view(source).substr(prefix.size()));
    if (!id) throw UsageError("unknown built-in '" + source + "' (a1_fixed, a1_modifiable, a2_nolights)");
    return {builtin(*id), id};
  }
  try {
    return {parse_rule_file(read_file(source)), std::nullopt};
  } catch (const ParseError& e) {
    throw UsageError(source + ":" + e.what());
  }
}

BuiltinId require_builtin(const std::string& source) {
  Source s = load_source(source);
  if (!s.builtin) throw UsageError("'" + source + "' is not a built-in (use builtin:<id>)");
  return *s.builtin;
}

AdversaryStrategy parse_adversary(const std::string& text) {
  if (text == "identity") return AdversaryStrategy::identity();
  if (text == "pingpong") return AdversaryStrategy::ping_pong();
  if (text.rfind("random", 0) == 0) {
    std::string seed_text;
    if (text == "random") {
      const char* env = std::getenv("EXPLORE_SEED");
      if (env == nullptr) throw UsageError("'random' needs a seed: random:<seed> or EXPLORE_SEED");
      seed_text = env;
    } else if (text.size() > 7 && text[6] == ':') {
      seed_text = text.substr(7);
    } else {
      throw UsageError("bad adversary '" + text + "'");
    }
    std::uint64_t seed = 0;
    std::istringstream in(seed_text);
    if (!(in >> seed) || !in.eof()) throw UsageError("bad seed '" + seed_text + "'");
    return AdversaryStrategy::seeded_random(seed);
  }
  throw UsageError("adversary must be identity, pingpong or random:<seed>");
}

Viewport parse_viewport(const std::string& text) {
  Viewport v;
  char c1 = 0, c2 = 0, c3 = 0;
  std::istringstream in(text);
  if (!(in >> v.x0 >> c1 >> v.y0 >> c2 >> v.x1 >> c3 >> v.y1) || c1 != ',' || c2 != ',' || c3 != ',') {
    throw UsageError("viewport must be x0,y0,x1,y1");
  }
  if (v.x0 > v.x1 || v.y0 > v.y1) throw UsageError("viewport is degenerate");
  return v;
}

std::string pos_text(Position p) { return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")"; }

int cmd_check(const std::string& src, bool allow_symmetric, bool json, std::ostream& out) {
  Source s = load_source(src);
  std::string structure_error;
  try {
    check_structure(s.rules);
  } catch (const std::invalid_argument& e) {
    structure_error = e.what();
  }
  const ValidationReport report = validate(s.rules);
  const bool ok = structure_error.empty() && report.acceptable(allow_symmetric);

  if (json) {
    nlohmann::json j;
    j["rule_set"] = s.rules.name;
    j["rules"] = s.rules.rules.size();
    j["expanded"] = expand_rotations(s.rules).size();
    j["conflicts"] = nlohmann::json::array();
    for (const auto& c : report.conflicts) {
      j["conflicts"].push_back({{"first", c.first},
                                {"second", c.second},
                                {"rotation", c.rotation.quarter_turns()},
                                {"description", c.description}});
    }
    j["adversary_controlled"] = report.adversary_controlled;
    j["normalization_warnings"] = nlohmann::json::array();
    for (const auto& w : report.normalization_warnings) {
      j["normalization_warnings"].push_back({{"rule", w.rule_index}, {"description", w.description}});
    }
    if (!structure_error.empty()) j["structure_error"] = structure_error;
    j["well_defined"] = report.well_defined() && structure_error.empty();
    j["pass"] = ok;
    out << j.dump(2) << '\n';
    return ok ? kOk : kCheckFailed;
  }

  out << "rule set: " << s.rules.name << " (" << s.rules.rules.size() << " rules, phi " << s.rules.phi << ", "
      << s.rules.colors.size() << " colors)\n";
  if (!structure_error.empty()) out << "structure error: " << structure_error << '\n';
  out << "conflicts: " << report.conflicts.size() << '\n';
  for (const auto& c : report.conflicts) out << "  " << c.description << '\n';
  out << "adversary-controlled: " << report.adversary_controlled.size() << '\n';
  for (std::size_t i : report.adversary_controlled) {
    out << "  rule " << i << ": symmetric pattern, the adversary chooses the move\n";
  }
  out << "normalization warnings: " << report.normalization_warnings.size() << '\n';
  for (const auto& w : report.normalization_warnings) out << "  rule " << w.rule_index << ": " << w.description << '\n';
  out << (ok ? "well-defined" : "NOT well-defined") << '\n';
  return ok ? kOk : kCheckFailed;
}

int cmd_run(const std::string& src, std::uint64_t rounds, const std::string& adversary_text,
            const std::string& trace_path, bool allow_symmetric, std::ostream& out, std::ostream& err) {
  Source s = load_source(src);
  const ValidationReport report = validate(s.rules);
  if (!report.acceptable(allow_symmetric)) {
    err << "rule set is not well-defined; run 'check' for details";
    if (report.conflicts.empty()) err << " (or pass --allow-symmetric)";
    err << '\n';
    return kCheckFailed;
  }
  const CompiledRuleSet compiled(s.rules);
  const AdversaryStrategy adversary = parse_adversary(adversary_text);
  TraceHeader header;
  header.algorithm = s.rules.name;
  header.phi = s.rules.phi;
  header.adversary = adversary.describe();
  if (adversary.kind() == AdversaryStrategy::Kind::SeededRandom) header.seed = adversary.seed();

  int code = kOk;
  Trace trace;
  try {
    trace = run(compiled, rounds, adversary);
  } catch (const RunAborted& e) {
    err << "node collision at " << pos_text(e.target) << " in round " << e.round << '\n';
    trace = e.partial;
    code = kViolation;
  }
  const std::string text = serialize_trace(trace, s.rules.colors, header);
  if (trace_path.empty() || trace_path == "-") {
    out << text;
  } else {
    write_file_atomic(trace_path, text);
  }
  return code;
}

int cmd_verify(const std::string& src, std::uint64_t phases, std::uint64_t budget, bool json, std::ostream& out) {
  const BuiltinId id = require_builtin(src);
  if (phases < 2) throw UsageError("--phases must be at least 2");
  if (budget == 0) budget = 200 * (phases + 2) * (phases + 2) + 1000;

  nlohmann::json j;
  j["algorithm"] = std::string(builtin_name(id));
  Trace trace;
  PhaseDetection detected;
  std::string missing;
  try {
    trace = run_until_phase(id, phases, budget);
    detected = detect_phases(trace, id, phases);
  } catch (const PhaseMissing& e) {
    missing = e.what();
  } catch (const NodeCollision& e) {
    missing = e.what();
  }

  bool all = missing.empty();
  std::vector<bool> coverage;
  bool divergence = false;
  ExclusivenessCounts audit;
  if (missing.empty()) {
    for (std::uint64_t i = 0; i + 1 <= phases; ++i) {
      coverage.push_back(check_boundary_coverage(trace, id, i, detected));
      all = all && coverage.back();
    }
    divergence = distance_divergence(trace, detected);
    all = all && divergence;
    audit = exclusiveness_audit(trace);
  }

  if (json) {
    j["phase_rounds"] = detected.rounds;
    j["coverage"] = coverage;
    j["divergence"] = divergence;
    j["collisions"] = audit.collisions;
    j["swaps"] = audit.swaps;
    if (!missing.empty()) j["error"] = missing;
    j["pass"] = all;
    out << j.dump(2) << '\n';
    return all ? kOk : kCheckFailed;
  }

  out << "algorithm " << builtin_name(id) << '\n';
  if (!missing.empty()) {
    out << "phases FAILED: " << missing << '\n';
    out << "result false\n";
    return kCheckFailed;
  }
  for (std::size_t i = 0; i < detected.rounds.size(); ++i) {
    out << "phase " << i << " round " << detected.rounds[i];
    if (i + 1 < detected.rounds.size()) out << " duration " << detected.duration(i);
    out << '\n';
  }
  for (std::size_t i = 0; i < coverage.size(); ++i) {
    out << "coverage " << i << ' ' << (coverage[i] ? "true" : "false") << '\n';
  }
  out << "divergence " << (divergence ? "true" : "false") << '\n';
  out << "audit collisions=" << audit.collisions << " swaps=" << audit.swaps << '\n';
  out << "result " << (all ? "true" : "false") << '\n';
  return all ? kOk : kCheckFailed;
}

int cmd_cover(const std::string& src, Coord radius, std::uint64_t budget, const std::string& adversary_text,
              bool allow_symmetric, std::ostream& out) {
  Source s = load_source(src);
  const ValidationReport report = validate(s.rules);
  if (!report.acceptable(allow_symmetric)) {
    out << "rule set is not well-defined; run 'check'\n";
    return kCheckFailed;
  }
  const CompiledRuleSet compiled(s.rules);
  try {
    const auto round = verify_radius_coverage(compiled, radius, budget, parse_adversary(adversary_text));
    out << "covered radius " << radius << " at round " << round << '\n';
    return kOk;
  } catch (const BudgetExhausted& e) {
    out << "not covered after " << e.budget << " rounds; unvisited " << pos_text(e.witness) << '\n';
    return kCheckFailed;
  }
}

int cmd_render(const std::string& path, const std::string& format_text, const std::string& viewport_text,
               std::uint64_t every, const std::string& prefix, std::ostream& out) {
  FrameFormat format;
  if (format_text == "ascii") {
    format = FrameFormat::Ascii;
  } else if (format_text == "svg") {
    format = FrameFormat::Svg;
  } else {
    throw UsageError("--format must be ascii or svg");
  }
  if (every == 0) throw UsageError("--every must be positive");
  ParsedTrace parsed;
  try {
    parsed = parse_trace(read_file(path));
  } catch (const ParseError& e) {
    throw UsageError(path + ":" + e.what());
  }

  Viewport viewport;
  if (!viewport_text.empty()) {
    viewport = parse_viewport(viewport_text);
  } else {
    Configuration all;
    for (const auto& f : parsed.frames) {
      for (const auto& [p, c] : f.configuration.robots()) {
        if (!all.occupied(p)) all.place(p, c);
      }
    }
    viewport = bounding_viewport(all, 1);
  }

  for (std::size_t k = 0; k < parsed.frames.size(); k += every) {
    const TraceFrame& frame = parsed.frames[k];
    const std::string title = parsed.header.algorithm + " round " + std::to_string(frame.round);
    if (format == FrameFormat::Ascii) {
      out << "# round " << frame.round << '\n';
      out << render_frame(frame.configuration, parsed.colors, viewport, format);
      out << '\n';
    } else {
      std::ostringstream name;
      name << prefix << '_' << std::setw(6) << std::setfill('0') << frame.round << ".svg";
      write_file_atomic(name.str(), render_frame(frame.configuration, parsed.colors, viewport, format, title));
      out << name.str() << '\n';
    }
  }
  return kOk;
}

int cmd_bench(const std::string& src, std::uint64_t rounds, std::ostream& out) {
  const BuiltinId id = require_builtin(src);
  const CompiledRuleSet& rules = compiled_builtin(id);
  Simulation sim(rules, rules.source().initial, AdversaryStrategy::identity(), false);
  std::unordered_set<Position, PositionHash> visited;
  std::size_t peak = sim.current().size();
  for (const auto& [p, c] : sim.current().robots()) visited.insert(p);
  const auto start = std::chrono::steady_clock::now();
  for (std::uint64_t r = 0; r < rounds; ++r) {
    const Configuration& c = sim.advance();
    peak = std::max(peak, c.size());
    for (const auto& [p, col] : c.robots()) visited.insert(p);
  }
  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
  const double seconds = elapsed.count();
  out << "algorithm " << builtin_name(id) << '\n';
  out << "rounds " << rounds << '\n';
  out << "seconds " << std::fixed << std::setprecision(6) << seconds << '\n';
  out << "rounds_per_second " << std::setprecision(1) << (seconds > 0 ? rounds / seconds : 0.0) << '\n';
  out << "peak_occupied " << peak << '\n';
  out << "visited_nodes " << visited.size() << '\n';
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Simulator and verifier for luminous robots exploring the infinite grid", "ige"};
  app.require_subcommand(1);

  std::string src;
  bool allow_symmetric = false;
  bool json = false;
  std::uint64_t rounds = 0;
  std::uint64_t budget = 0;
  std::uint64_t phases = 0;
  std::uint64_t every = 1;
  Coord radius = 0;
  std::string adversary = "identity";
  std::string trace_path;
  std::string format;
  std::string viewport;
  std::string prefix = "frame";

  auto* check = app.add_subcommand("check", "Validate a rule set's well-definedness");
  check->add_option("source", src, "rule file or builtin:<id>")->required();
  check->add_flag("--allow-symmetric", allow_symmetric, "accept adversary-controlled symmetric rules");
  check->add_flag("--json", json, "machine-readable report");

  auto* run_cmd = app.add_subcommand("run", "Simulate and write a trace");
  run_cmd->add_option("source", src, "rule file or builtin:<id>")->required();
  run_cmd->add_option("--rounds", rounds, "number of rounds")->required();
  run_cmd->add_option("--adversary", adversary, "identity | pingpong | random:<seed>");
  run_cmd->add_option("--trace", trace_path, "output file (default: stdout)");
  run_cmd->add_flag("--allow-symmetric", allow_symmetric, "run rule sets with symmetric rules");

  auto* verify = app.add_subcommand("verify", "Check phases, boundary coverage and divergence of a built-in");
  verify->add_option("source", src, "builtin:<id>")->required();
  verify->add_option("--phases", phases, "highest phase to detect")->required();
  verify->add_option("--budget", budget, "round budget (default grows with --phases)");
  verify->add_flag("--json", json, "machine-readable summary");

  auto* cover = app.add_subcommand("cover", "First round at which [-R,R]^2 is visited");
  cover->add_option("source", src, "rule file or builtin:<id>")->required();
  cover->add_option("--radius", radius, "half width R")->required()->check(CLI::NonNegativeNumber);
  cover->add_option("--budget", budget, "round budget")->default_val(100000);
  cover->add_option("--adversary", adversary, "identity | pingpong | random:<seed>");
  cover->add_flag("--allow-symmetric", allow_symmetric, "run rule sets with symmetric rules");

  auto* render = app.add_subcommand("render", "Draw frames of a trace file");
  render->add_option("tracefile", src, "trace written by 'run'")->required();
  render->add_option("--format", format, "ascii | svg")->required();
  render->add_option("--viewport", viewport, "x0,y0,x1,y1 (default: fit all frames)");
  render->add_option("--every", every, "keep every K-th frame")->default_val(1);
  render->add_option("--out", prefix, "svg file prefix")->default_val("frame");

  auto* bench = app.add_subcommand("bench", "Throughput of a built-in");
  bench->add_option("source", src, "builtin:<id>")->required();
  bench->add_option("--rounds", rounds, "number of rounds")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (check->parsed()) return cmd_check(src, allow_symmetric, json, out);
    if (run_cmd->parsed()) return cmd_run(src, rounds, adversary, trace_path, allow_symmetric, out, err);
    if (verify->parsed()) return cmd_verify(src, phases, budget, json, out);
    if (cover->parsed()) return cmd_cover(src, radius, budget, adversary, allow_symmetric, out);
    if (render->parsed()) return cmd_render(src, format, viewport, every, prefix, out);
    if (bench->parsed()) return cmd_bench(src, rounds, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const NodeCollision& e) {
    err << "error: " << e.what() << '\n';
    return kViolation;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kCheckFailed;
  }
  return kUsage;
}

}  // namespace ige::cli
