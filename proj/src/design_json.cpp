#include "kohler_sqs/design_json.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

namespace kohler {

namespace {

json factors_to_json(const Group& g) { return json(g.factors()); }

std::vector<std::int64_t> int_array(const json& j, std::string_view what) {
  if (!j.is_array()) throw InvalidInput(std::string(what) + " must be an array of integers");
  std::vector<std::int64_t> out;
  for (const json& x : j) {
    if (!x.is_number_integer()) throw InvalidInput(std::string(what) + " must be an array of integers");
    out.push_back(x.get<std::int64_t>());
  }
  return out;
}

Provenance provenance_from_string(const std::string& s) {
  if (s == "B0") return {Provenance::Source::B0, 0};
  constexpr std::string_view prefix = "factor:";
  if (s.starts_with(prefix)) {
    std::size_t edge = 0;
    const char* first = s.data() + prefix.size();
    const char* last = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(first, last, edge);
    if (ec == std::errc() && ptr == last && first != last) return {Provenance::Source::Factor, edge};
  }
  if (s == "external") return {};
  throw InvalidInput("unrecognized provenance entry \"" + s + "\"");
}

std::string provenance_to_string(const Provenance& p) {
  switch (p.source) {
    case Provenance::Source::B0: return "B0";
    case Provenance::Source::Factor: return "factor:" + std::to_string(p.edge);
    case Provenance::Source::External: return "external";
  }
  return "external";
}

// Reads one element written in the coordinates of `pres.factors()`.
Element read_element(const Presentation& pres, const json& j) {
  const auto coords = int_array(j, "element");
  const auto& factors = pres.factors();
  if (coords.size() != factors.size()) {
    throw InvalidInput("element has " + std::to_string(coords.size()) + " coordinates, expected " +
                       std::to_string(factors.size()));
  }
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (coords[i] < 0 || coords[i] >= factors[i]) {
      throw InvalidInput("coordinate " + std::to_string(coords[i]) + " out of range for Z" +
                         std::to_string(factors[i]));
    }
  }
  return pres.element(coords);
}

Subset read_block(const Presentation& pres, const json& j) {
  if (!j.is_array() || j.size() != 4) throw InvalidInput("every block must list exactly 4 elements");
  std::vector<Element> elems;
  for (const json& x : j) elems.push_back(read_element(pres, x));
  return Subset(elems);
}

}  // namespace

json element_to_json(const Group& g, Element x) { return json(g.coords(x)); }

Element element_from_json(const Group& g, const json& j) {
  return g.from_reduced_coords(int_array(j, "element"));
}

json subset_to_json(const Group& g, const Subset& s) {
  json out = json::array();
  for (Element x : s) out.push_back(element_to_json(g, x));
  return out;
}

Subset subset_from_json(const Group& g, const json& j) {
  if (!j.is_array()) throw InvalidInput("subset must be an array of elements");
  std::vector<Element> elems;
  for (const json& x : j) elems.push_back(element_from_json(g, x));
  return Subset(elems);
}

json design_to_json(const Design& d) {
  const Group& g = d.group;
  json blocks = json::array();
  for (const Subset& b : d.blocks) blocks.push_back(subset_to_json(g, b));
  json provenance = json::array();
  for (const Provenance& p : d.provenance) provenance.push_back(provenance_to_string(p));
  return json{{"group", factors_to_json(g)},
              {"h0", element_to_json(g, d.h0)},
              {"blocks", std::move(blocks)},
              {"provenance", std::move(provenance)}};
}

Design design_from_json(const json& j) {
  try {
    if (!j.is_object()) throw InvalidInput("design must be a JSON object");
    const Presentation pres(int_array(j.at("group"), "group"));
    const Group& g = pres.group();

    std::vector<Subset> blocks;
    const json& jb = j.at("blocks");
    if (!jb.is_array()) throw InvalidInput("blocks must be an array");
    for (const json& b : jb) blocks.push_back(read_block(pres, b));

    std::vector<Provenance> provenance(blocks.size());
    if (j.contains("provenance")) {
      const json& jp = j.at("provenance");
      if (!jp.is_array() || jp.size() != blocks.size()) {
        throw InvalidInput("provenance must have one entry per block");
      }
      for (std::size_t i = 0; i < jp.size(); ++i) provenance[i] = provenance_from_string(jp[i].get<std::string>());
    }

    std::vector<std::size_t> order(blocks.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return blocks[a] < blocks[b]; });

    Design d{g, g.zero(), {}, {}};
    for (std::size_t i : order) {
      d.blocks.push_back(blocks[i]);
      d.provenance.push_back(provenance[i]);
    }
    if (j.contains("h0")) {
      d.h0 = read_element(pres, j.at("h0"));
    } else if (g.order() % 2 == 0) {
      d.h0 = choose_h0(g);
    }
    return d;
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("malformed design: ") + e.what());
  }
}

json report_to_json(const Group& g, const VerificationReport& r) {
  json coverage = json::array();
  for (const auto& c : r.triple_coverage_violations) {
    coverage.push_back({{"triple", subset_to_json(g, c.triple)}, {"count", c.count}});
  }
  json asymmetric = json::array();
  for (const Subset& b : r.asymmetric_blocks) asymmetric.push_back(subset_to_json(g, b));
  json invariance = json::array();
  for (const auto& v : r.invariance_violations) {
    invariance.push_back({{"block", subset_to_json(g, v.block)}, {"missing_image", subset_to_json(g, v.missing_image)}});
  }
  return json{{"is_sqs", r.is_sqs},
              {"is_reversible", r.is_reversible},
              {"triple_coverage_violations", std::move(coverage)},
              {"asymmetric_blocks", std::move(asymmetric)},
              {"invariance_violations", std::move(invariance)}};
}

json stats_to_json(const Group& g, const GraphStats& s) {
  json degrees = json::object();
  for (auto [deg, count] : s.degree_histogram) degrees[std::to_string(deg)] = count;
  return json{{"group", factors_to_json(g)},
              {"V", s.vertex_count},
              {"E", s.edge_count},
              {"degrees", std::move(degrees)},
              {"components", s.component_sizes},
              {"isolated", s.isolated_count}};
}

json graph_to_json(const KohlerGraph& kg) {
  const Group& g = kg.group();
  json vertices = json::array();
  for (const OrbitRep& r : kg.vertices()) vertices.push_back({{"base", subset_to_json(g, r.base)}});
  json edges = json::array();
  for (const GraphEdge& e : kg.edges()) {
    edges.push_back({{"base", subset_to_json(g, e.orbit.base)}, {"endpoints", {e.endpoints[0], e.endpoints[1]}}});
  }
  return json{{"group", factors_to_json(g)}, {"vertices", std::move(vertices)}, {"edges", std::move(edges)}};
}

json failure_to_json(const Group& g, const ConstructionFailure& f) {
  json comp = json::array();
  for (const OrbitRep& r : f.witness_component) comp.push_back(subset_to_json(g, r.base));
  return json{{"reason", f.reason}, {"isolated_vertex", f.isolated_vertex}, {"witness_component", std::move(comp)}};
}

json verdict_to_json(const Group& g, const ExistenceVerdict& v) {
  json out{{"group", factors_to_json(g)},
           {"v", g.order()},
           {"verdict", std::string(to_string(v.verdict))},
           {"rule", v.rule},
           {"reason", v.reason}};
  if (v.witness) out["witness"] = design_to_json(*v.witness);
  if (v.failure) out["failure"] = failure_to_json(g, *v.failure);
  if (v.diagnostics) {
    json primes = json::array();
    for (const PrimeCheck& p : v.diagnostics->primes) {
      json entry{{"prime", p.prime}, {"evaluated", p.evaluated}};
      if (p.evaluated) entry["has_one_factor"] = p.has_one_factor;
      primes.push_back(std::move(entry));
    }
    out["diagnostics"] = json{{"v_mod_8", v.diagnostics->v_mod_8},
                              {"even", v.diagnostics->even},
                              {"not_divisible_by_3", v.diagnostics->not_divisible_by_3},
                              {"not_divisible_by_8", v.diagnostics->not_divisible_by_8},
                              {"primes", std::move(primes)}};
  }
  return out;
}

}  // namespace kohler
