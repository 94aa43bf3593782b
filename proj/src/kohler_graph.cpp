#include "kohler_sqs/kohler_graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace kohler {

KohlerGraph::KohlerGraph(Group group, std::vector<OrbitRep> vertices, std::vector<GraphEdge> edges)
    : group_(std::move(group)), vertices_(std::move(vertices)), edges_(std::move(edges)), adjacency_(vertices_.size()) {
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    auto [u, w] = edges_[e].endpoints;
    if (u >= vertices_.size() || w >= vertices_.size() || u == w) {
      throw InvalidInput("edge endpoints must be two distinct vertices");
    }
    adjacency_[u].push_back({e, w});
    adjacency_[w].push_back({e, u});
  }
}

std::optional<std::size_t> KohlerGraph::find_vertex(const OrbitRep& r) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), r);
  if (it == vertices_.end() || !(*it == r)) return std::nullopt;
  return static_cast<std::size_t>(it - vertices_.begin());
}

std::optional<std::size_t> KohlerGraph::find_edge(const OrbitRep& r) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), r,
                             [](const GraphEdge& e, const OrbitRep& key) { return e.orbit < key; });
  if (it == edges_.end() || !(it->orbit == r)) return std::nullopt;
  return static_cast<std::size_t>(it - edges_.begin());
}

std::span<const Incidence> KohlerGraph::incidences(std::size_t vertex) const {
  if (vertex >= vertices_.size()) throw InvalidInput("unknown vertex " + std::to_string(vertex));
  return adjacency_[vertex];
}

std::vector<std::size_t> KohlerGraph::neighbors(std::size_t vertex) const {
  std::vector<std::size_t> out;
  for (const Incidence& inc : incidences(vertex)) out.push_back(inc.neighbor);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<std::size_t>> KohlerGraph::connected_components() const {
  return kohler::connected_components(to_simple_graph());
}

GraphStats KohlerGraph::stats() const {
  GraphStats s;
  s.vertex_count = vertex_count();
  s.edge_count = edge_count();
  for (std::size_t v = 0; v < vertex_count(); ++v) {
    ++s.degree_histogram[degree(v)];
    if (is_isolated(v)) ++s.isolated_count;
  }
  for (const auto& comp : connected_components()) s.component_sizes.push_back(comp.size());
  return s;
}

SimpleGraph KohlerGraph::to_simple_graph() const {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  pairs.reserve(edges_.size());
  for (const GraphEdge& e : edges_) pairs.emplace_back(e.endpoints[0], e.endpoints[1]);
  return SimpleGraph(vertices_.size(), std::move(pairs));
}

KohlerGraph build_graph(const Group& g) { return build_graph(g, enumerate_elements(g)); }

KohlerGraph build_graph(const Group& g, std::span<const Element> subgroup) {
  check_capacity(g.order());
  const Element zero = g.zero();
  std::vector<Element> nonzero;
  for (Element x : subgroup) {
    if (x != zero) nonzero.push_back(x);
  }

  std::unordered_set<OrbitRep, OrbitRepHash> vertex_set;
  std::unordered_map<OrbitRep, std::array<OrbitRep, 2>, OrbitRepHash> edge_map;

  for (std::size_t i = 0; i < nonzero.size(); ++i) {
    const Element a = nonzero[i];
    for (std::size_t j = i + 1; j < nonzero.size(); ++j) {
      const Element b = nonzero[j];
      if (in_T(g, a, b)) vertex_set.insert(canonicalize(g, Subset{zero, a, b}));

      const Element s = g.add(a, b);
      if (s == zero || s == a || s == b || !in_E(g, a, b)) continue;
      const OrbitRep edge = canonicalize(g, Subset{zero, a, b, s});
      if (edge_map.contains(edge)) continue;
      // The triples inside {0,a,b,a+b} fall into exactly the orbits [a,b] and [a,a+b].
      edge_map.emplace(edge, std::array<OrbitRep, 2>{canonicalize(g, Subset{zero, a, b}),
                                                     canonicalize(g, Subset{zero, a, s})});
    }
  }

  std::vector<OrbitRep> vertices(vertex_set.begin(), vertex_set.end());
  std::sort(vertices.begin(), vertices.end());
  auto index_of = [&](const OrbitRep& r) {
    auto it = std::lower_bound(vertices.begin(), vertices.end(), r);
    if (it == vertices.end() || !(*it == r)) {
      throw std::logic_error("edge endpoint is not a vertex of the Kohler graph");
    }
    return static_cast<std::size_t>(it - vertices.begin());
  };

  std::vector<GraphEdge> edges;
  edges.reserve(edge_map.size());
  for (const auto& [orbit, ends] : edge_map) {
    edges.push_back(GraphEdge{orbit, {index_of(ends[0]), index_of(ends[1])}});
  }
  std::sort(edges.begin(), edges.end(), [](const GraphEdge& x, const GraphEdge& y) { return x.orbit < y.orbit; });
  for (GraphEdge& e : edges) {
    if (e.endpoints[0] > e.endpoints[1]) std::swap(e.endpoints[0], e.endpoints[1]);
  }
  return KohlerGraph(g, std::move(vertices), std::move(edges));
}

std::vector<OrbitRep> formula_neighbors(const Group& g, Element a, Element b) {
  const std::array<std::pair<Element, Element>, 3> candidates{
      std::pair{a, g.add(a, b)}, std::pair{b, g.sub(a, b)}, std::pair{a, g.sub(b, a)}};
  std::vector<OrbitRep> out;
  for (auto [x, y] : candidates) {
    if (x == g.zero() || y == g.zero() || x == y) continue;
    if (in_T(g, x, y)) out.push_back(canonicalize(g, Subset{g.zero(), x, y}));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace kohler
