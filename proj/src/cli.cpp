#include "kohler_sqs/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "kohler_sqs/design_json.hpp"

namespace kohler {

namespace {

constexpr const char* kCapacityEnv = "KOHLER_SQS_MAX_V";

struct Options {
  std::string group;
  std::string out_path;
  std::string h0;
  std::string design_path;
  bool stats = false;
  bool do_export = false;
};

// Restores the process-wide capacity limit on scope exit.
class CapacityGuard {
 public:
  CapacityGuard() : saved_(capacity_limit()) {}
  ~CapacityGuard() { set_capacity_limit(saved_); }
  CapacityGuard(const CapacityGuard&) = delete;
  CapacityGuard& operator=(const CapacityGuard&) = delete;

 private:
  std::size_t saved_;
};

void apply_capacity_env() {
  const char* raw = std::getenv(kCapacityEnv);
  if (raw == nullptr || *raw == '\0') return;
  const std::string_view s(raw);
  std::size_t limit = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), limit);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw InvalidInput(std::string(kCapacityEnv) + " must be a non-negative integer, got \"" + raw + "\"");
  }
  set_capacity_limit(limit);
}

// "0,5", "[0,5]" or "(0,5)" in normalized coordinates.
Element parse_element(const Group& g, std::string_view text) {
  std::string cleaned;
  for (char c : text) {
    if (c != '[' && c != ']' && c != '(' && c != ')' && c != ' ') cleaned += c;
  }
  std::vector<std::int64_t> coords;
  std::stringstream ss(cleaned);
  std::string part;
  while (std::getline(ss, part, ',')) {
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
    if (part.empty() || ec != std::errc() || ptr != part.data() + part.size()) {
      throw InvalidInput("cannot parse element \"" + std::string(text) + "\"");
    }
    coords.push_back(value);
  }
  return g.from_reduced_coords(coords);
}

std::optional<Element> parse_h0(const Group& g, const std::string& text) {
  if (text.empty()) return std::nullopt;
  const Element h0 = parse_element(g, text);
  if (g.element_order(h0) != 2) throw InvalidInput("--h0 must have order 2");
  return h0;
}

void require_even(const Group& g) {
  if (g.order() % 2 != 0) {
    throw InvalidOrder("invalid order " + std::to_string(g.order()) + " (odd): an SQS needs v = 2 or 4 (mod 6)");
  }
}

void require_sqs_order(const Group& g) {
  require_even(g);
  if (!has_sqs_order(g)) {
    throw InvalidOrder("invalid order " + std::to_string(g.order()) + ": an SQS needs v = 2 or 4 (mod 6)");
  }
}

int cmd_construct(const Options& o, std::ostream& out, std::ostream& err) {
  const Group g = parse_group_spec(o.group);
  require_sqs_order(g);
  auto result = construct_design(g, parse_h0(g, o.h0));
  if (auto* failure = std::get_if<ConstructionFailure>(&result)) {
    err << "construction failed for " << g.to_string() << ": " << failure->reason << "\n"
        << failure_to_json(g, *failure).dump() << "\n";
    return kExitNo;
  }
  const Design& d = std::get<Design>(result);
  const std::string text = design_to_json(d).dump() + "\n";
  if (o.out_path.empty()) {
    out << text;
  } else {
    std::ofstream file(o.out_path, std::ios::binary);
    if (!(file << text)) throw InvalidInput("cannot write " + o.out_path);
    err << "wrote " << d.blocks.size() << " blocks to " << o.out_path << "\n";
  }
  return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream&) {
  std::ifstream file(o.design_path, std::ios::binary);
  if (!file) throw InvalidInput("cannot open " + o.design_path);
  json j;
  try {
    j = json::parse(file);
  } catch (const json::exception& e) {
    throw InvalidInput(o.design_path + " is not valid JSON: " + e.what());
  }
  const Design d = design_from_json(j);
  const VerificationReport report = verify_design(d.group, d.blocks);
  json body = report_to_json(d.group, report);
  body["group"] = json(d.group.factors());
  body["block_count"] = d.blocks.size();
  if (d.group.order() % 2 == 0 && d.group.element_order(d.h0) == 2) {
    body["contains_b0"] = contains_b0(d.group, d.h0, d.blocks);
  }
  out << body.dump(2) << "\n";
  return report.is_sqs && report.is_reversible ? kExitOk : kExitViolations;
}

int cmd_graph(const Options& o, std::ostream& out, std::ostream&) {
  const Group g = parse_group_spec(o.group);
  const KohlerGraph kg = build_graph(g);
  if (o.do_export) {
    out << graph_to_json(kg).dump() << "\n";
  } else {
    out << stats_to_json(g, kg.stats()).dump(2) << "\n";
  }
  return kExitOk;
}

int cmd_exists(const Options& o, std::ostream& out, std::ostream& err) {
  const Group g = parse_group_spec(o.group);
  require_even(g);
  const ExistenceVerdict v = existence_check(g);
  err << to_string(v.verdict) << ": " << v.reason << "\n";
  out << verdict_to_json(g, v).dump() << "\n";
  switch (v.verdict) {
    case Verdict::Yes: return kExitOk;
    case Verdict::No: return kExitNo;
    case Verdict::Unknown: return kExitUnknown;
  }
  return kExitUnknown;
}

int cmd_count(const Options& o, std::ostream& out, std::ostream&) {
  const Group g = parse_group_spec(o.group);
  require_sqs_order(g);
  const Element h0 = parse_h0(g, o.h0).value_or(choose_h0(g));
  const std::int64_t special_formula = count_special_triples_formula(g);
  const std::int64_t b0_formula = count_b0_formula(g);
  const std::int64_t special_enum = enumerate_special_triples(g);
  const std::int64_t b0_enum = enumerate_b0(g, h0);
  const json body{{"group", g.factors()},
                  {"v", g.order()},
                  {"h0", element_to_json(g, h0)},
                  {"special_triples", special_formula},
                  {"b0_size", b0_formula},
                  {"formula_values", {{"special_triples", special_formula}, {"b0_size", b0_formula}}},
                  {"enumeration_values", {{"special_triples", special_enum}, {"b0_size", b0_enum}}},
                  {"agree", special_formula == special_enum && b0_formula == b0_enum}};
  out << body.dump(2) << "\n";
  return kExitOk;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Construct and check A-reversible Steiner quadruple systems", "kohler-sqs"};
  app.require_subcommand(1);
  Options o;

  auto* construct = app.add_subcommand("construct", "Build a design from B0 and a 1-factor of the Kohler graph");
  construct->add_option("--group", o.group, "Group spec, e.g. 2,2,5 or Z4xZ4")->required();
  construct->add_option("--out", o.out_path, "Write the design here instead of stdout");
  construct->add_option("--h0", o.h0, "Involution for B0, normalized coordinates, e.g. 0,5");

  auto* verify = app.add_subcommand("verify", "Check a design file");
  verify->add_option("design", o.design_path, "Design JSON file")->required();

  auto* graph = app.add_subcommand("graph", "Kohler graph statistics or export");
  graph->add_option("--group", o.group, "Group spec")->required();
  auto* stats_flag = graph->add_flag("--stats", o.stats, "Print summary statistics (default)");
  auto* export_flag = graph->add_flag("--export", o.do_export, "Print vertices and edges");
  stats_flag->excludes(export_flag);

  auto* exists = app.add_subcommand("exists", "Decide existence of an A-reversible SQS");
  exists->add_option("--group", o.group, "Group spec")->required();

  auto* count = app.add_subcommand("count", "Compare closed-form counts with enumeration");
  count->add_option("--group", o.group, "Group spec")->required();
  count->add_option("--h0", o.h0, "Involution for B0, normalized coordinates");

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, err, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  CapacityGuard guard;
  try {
    apply_capacity_env();
    if (construct->parsed()) return cmd_construct(o, out, err);
    if (verify->parsed()) return cmd_verify(o, out, err);
    if (graph->parsed()) return cmd_graph(o, out, err);
    if (exists->parsed()) return cmd_exists(o, out, err);
    if (count->parsed()) return cmd_count(o, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace kohler
