#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "kohler_sqs/group.hpp"
#include "kohler_sqs/matching.hpp"
#include "kohler_sqs/orbit.hpp"

namespace kohler {

struct GraphEdge {
  OrbitRep orbit;  // [a,b,a+b]
  std::array<std::size_t, 2> endpoints;
};

struct Incidence {
  std::size_t edge;
  std::size_t neighbor;
};

struct GraphStats {
  std::size_t vertex_count = 0;
  std::size_t edge_count = 0;
  std::map<std::size_t, std::size_t> degree_histogram;
  std::vector<std::size_t> component_sizes;
  std::size_t isolated_count = 0;
};

// Vertices are the triple orbits in T, edges the quadruple orbits in E, a
// vertex and an edge being incident when some member of the edge orbit
// contains a member of the vertex orbit. Vertices and edges are indexed in
// lexicographic order of their canonical bases.
class KohlerGraph {
 public:
  KohlerGraph(Group group, std::vector<OrbitRep> vertices, std::vector<GraphEdge> edges);

  const Group& group() const { return group_; }
  const std::vector<OrbitRep>& vertices() const { return vertices_; }
  const std::vector<GraphEdge>& edges() const { return edges_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  std::optional<std::size_t> find_vertex(const OrbitRep& r) const;
  std::optional<std::size_t> find_edge(const OrbitRep& r) const;

  // Throws InvalidInput for an out-of-range vertex.
  std::span<const Incidence> incidences(std::size_t vertex) const;
  std::size_t degree(std::size_t vertex) const { return incidences(vertex).size(); }
  std::vector<std::size_t> neighbors(std::size_t vertex) const;
  bool is_isolated(std::size_t vertex) const { return degree(vertex) == 0; }

  // Sorted by smallest member; each component's vertices ascending.
  std::vector<std::vector<std::size_t>> connected_components() const;
  GraphStats stats() const;

  SimpleGraph to_simple_graph() const;

 private:
  Group group_;
  std::vector<OrbitRep> vertices_;
  std::vector<GraphEdge> edges_;
  std::vector<std::vector<Incidence>> adjacency_;
};

KohlerGraph build_graph(const Group& g);

// Graph of the subgroup with the given elements (which must be closed under
// addition), built with the ambient arithmetic. Canonical forms only involve
// the elements of a subset, so vertex and edge labels agree with those of the
// ambient graph.
KohlerGraph build_graph(const Group& g, std::span<const Element> subgroup);

// Neighbours of [a,b] computed directly: {[a,a+b],[b,a-b],[a,b-a]} ∩ T.
std::vector<OrbitRep> formula_neighbors(const Group& g, Element a, Element b);

}  // namespace kohler
