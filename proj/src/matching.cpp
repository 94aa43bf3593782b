#include "kohler_sqs/matching.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>

#include "kohler_sqs/group.hpp"

namespace kohler {

SimpleGraph::SimpleGraph(std::size_t n, std::vector<std::pair<std::size_t, std::size_t>> edges)
    : n_(n), edges_(std::move(edges)), adj_(n) {
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    auto [u, v] = edges_[e];
    if (u >= n_ || v >= n_) throw InvalidInput("edge endpoint out of range");
    if (u == v) throw InvalidInput("self-loop in simple graph");
    if (!seen.emplace(std::min(u, v), std::max(u, v)).second) throw InvalidInput("repeated edge in simple graph");
    adj_[u].emplace_back(v, e);
    adj_[v].emplace_back(u, e);
  }
}

bool Matching::is_perfect() const {
  return std::all_of(mate.begin(), mate.end(), [](const auto& m) { return m.has_value(); });
}

std::vector<std::vector<std::size_t>> connected_components(const SimpleGraph& g) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<char> seen(g.vertex_count(), 0);
  for (std::size_t s = 0; s < g.vertex_count(); ++s) {
    if (seen[s]) continue;
    std::vector<std::size_t> comp{s};
    seen[s] = 1;
    for (std::size_t i = 0; i < comp.size(); ++i) {
      for (auto [w, e] : g.adjacent(comp[i])) {
        if (!seen[w]) {
          seen[w] = 1;
          comp.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

namespace {

constexpr int kNone = -1;

// Edmonds' algorithm on one connected graph given by adjacency lists.
class Blossom {
 public:
  explicit Blossom(std::vector<std::vector<int>> adj)
      : adj_(std::move(adj)), n_(static_cast<int>(adj_.size())), match_(n_, kNone) {}

  std::vector<int> run() {
    for (int v = 0; v < n_; ++v) {
      if (match_[v] != kNone) continue;
      for (int w : adj_[v]) {
        if (match_[w] == kNone) {
          match_[v] = w;
          match_[w] = v;
          break;
        }
      }
    }
    for (int v = 0; v < n_; ++v) {
      if (match_[v] != kNone) continue;
      int u = find_augmenting_path(v);
      while (u != kNone) {
        const int pv = parent_[u];
        const int next = match_[pv];
        match_[u] = pv;
        match_[pv] = u;
        u = next;
      }
    }
    return match_;
  }

 private:
  int lowest_common_ancestor(int a, int b) {
    std::vector<char> on_path(n_, 0);
    for (;;) {
      a = base_[a];
      on_path[a] = 1;
      if (match_[a] == kNone) break;
      a = parent_[match_[a]];
    }
    for (;;) {
      b = base_[b];
      if (on_path[b]) return b;
      b = parent_[match_[b]];
    }
  }

  void mark_path(int v, int b, int child) {
    while (base_[v] != b) {
      in_blossom_[base_[v]] = 1;
      in_blossom_[base_[match_[v]]] = 1;
      parent_[v] = child;
      child = match_[v];
      v = parent_[match_[v]];
    }
  }

  int find_augmenting_path(int root) {
    used_.assign(n_, 0);
    parent_.assign(n_, kNone);
    base_.resize(n_);
    std::iota(base_.begin(), base_.end(), 0);
    std::deque<int> queue{root};
    used_[root] = 1;
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop_front();
      for (int to : adj_[v]) {
        if (base_[v] == base_[to] || match_[v] == to) continue;
        if (to == root || (match_[to] != kNone && parent_[match_[to]] != kNone)) {
          const int b = lowest_common_ancestor(v, to);
          in_blossom_.assign(n_, 0);
          mark_path(v, b, to);
          mark_path(to, b, v);
          for (int i = 0; i < n_; ++i) {
            if (in_blossom_[base_[i]]) {
              base_[i] = b;
              if (!used_[i]) {
                used_[i] = 1;
                queue.push_back(i);
              }
            }
          }
        } else if (parent_[to] == kNone) {
          parent_[to] = v;
          if (match_[to] == kNone) return to;
          used_[match_[to]] = 1;
          queue.push_back(match_[to]);
        }
      }
    }
    return kNone;
  }

  std::vector<std::vector<int>> adj_;
  int n_;
  std::vector<int> match_;
  std::vector<int> parent_;
  std::vector<int> base_;
  std::vector<char> used_;
  std::vector<char> in_blossom_;
};

}  // namespace

Matching maximum_matching(const SimpleGraph& g) {
  Matching m;
  m.mate.assign(g.vertex_count(), std::nullopt);

  for (const auto& comp : connected_components(g)) {
    if (comp.size() < 2) continue;
    std::map<std::size_t, int> local;
    for (std::size_t i = 0; i < comp.size(); ++i) local[comp[i]] = static_cast<int>(i);
    std::vector<std::vector<int>> adj(comp.size());
    for (std::size_t i = 0; i < comp.size(); ++i) {
      for (auto [w, e] : g.adjacent(comp[i])) adj[i].push_back(local.at(w));
    }
    const std::vector<int> match = Blossom(std::move(adj)).run();
    for (std::size_t i = 0; i < comp.size(); ++i) {
      if (match[i] != kNone) m.mate[comp[i]] = comp[static_cast<std::size_t>(match[i])];
    }
  }

  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (!m.mate[v] || *m.mate[v] < v) continue;
    for (auto [w, e] : g.adjacent(v)) {
      if (w == *m.mate[v]) {
        m.matched_edges.push_back(e);
        break;
      }
    }
  }
  std::sort(m.matched_edges.begin(), m.matched_edges.end());
  return m;
}

std::variant<Matching, NoPerfectMatching> one_factor(const SimpleGraph& g) {
  const auto comps = connected_components(g);
  for (const auto& comp : comps) {
    if (comp.size() % 2 == 1) return NoPerfectMatching{comp, true};
  }
  Matching m = maximum_matching(g);
  for (const auto& comp : comps) {
    for (std::size_t v : comp) {
      if (!m.mate[v]) return NoPerfectMatching{comp, false};
    }
  }
  return m;
}

bool is_valid_matching(const SimpleGraph& g, const Matching& m) {
  if (m.mate.size() != g.vertex_count()) return false;
  std::vector<int> cover(g.vertex_count(), 0);
  for (std::size_t e : m.matched_edges) {
    if (e >= g.edges().size()) return false;
    auto [u, v] = g.edges()[e];
    if (++cover[u] > 1 || ++cover[v] > 1) return false;
    if (m.mate[u] != v || m.mate[v] != u) return false;
  }
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (m.mate[v].has_value() != (cover[v] == 1)) return false;
  }
  return true;
}

}  // namespace kohler
