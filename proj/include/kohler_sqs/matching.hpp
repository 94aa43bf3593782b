#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

namespace kohler {

// Undirected graph on vertices 0..n-1 without loops or repeated edges.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  // Throws InvalidInput on self-loops, repeated edges or out-of-range ends.
  SimpleGraph(std::size_t n, std::vector<std::pair<std::size_t, std::size_t>> edges);

  std::size_t vertex_count() const { return n_; }
  const std::vector<std::pair<std::size_t, std::size_t>>& edges() const { return edges_; }
  // Neighbours in edge order, as (neighbor, edge index).
  const std::vector<std::pair<std::size_t, std::size_t>>& adjacent(std::size_t v) const { return adj_[v]; }

 private:
  std::size_t n_ = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges_;
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj_;
};

struct Matching {
  std::vector<std::size_t> matched_edges;  // ascending edge indices
  std::vector<std::optional<std::size_t>> mate;

  std::size_t size() const { return matched_edges.size(); }
  bool is_perfect() const;
};

struct NoPerfectMatching {
  // Vertices of the first connected component that cannot be covered.
  std::vector<std::size_t> component;
  bool odd_component = false;
};

// Vertex sets of the connected components, ordered by smallest vertex.
std::vector<std::vector<std::size_t>> connected_components(const SimpleGraph& g);

// Maximum-cardinality matching by Edmonds' blossom algorithm. Deterministic:
// vertices and edges are scanned in index order.
Matching maximum_matching(const SimpleGraph& g);

// Perfect matching, or the first component that has none.
std::variant<Matching, NoPerfectMatching> one_factor(const SimpleGraph& g);

// True when no two edges in `m` share a vertex and `mate` agrees with them.
bool is_valid_matching(const SimpleGraph& g, const Matching& m);

}  // namespace kohler
