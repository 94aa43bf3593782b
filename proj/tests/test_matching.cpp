#include <gtest/gtest.h>

#include <map>
#include <random>

#include "kohler_sqs/kohler_graph.hpp"
#include "kohler_sqs/matching.hpp"
#include "oracle.hpp"

using namespace kohler;

namespace {

using EdgeList = std::vector<std::pair<std::size_t, std::size_t>>;

SimpleGraph cube() {
  EdgeList edges;
  for (std::size_t v = 0; v < 8; ++v) {
    for (std::size_t bit : {1u, 2u, 4u}) {
      if (v < (v ^ bit)) edges.emplace_back(v, v ^ bit);
    }
  }
  return SimpleGraph(8, edges);
}

SimpleGraph random_graph(std::mt19937& rng, std::size_t n) {
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  const double p = 0.1 + 0.8 * coin(rng);
  EdgeList edges;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      if (coin(rng) < p) edges.emplace_back(u, v);
    }
  }
  std::shuffle(edges.begin(), edges.end(), rng);
  return SimpleGraph(n, edges);
}

}  // namespace

TEST(SimpleGraphType, RejectsBadEdges) {
  EXPECT_THROW(SimpleGraph(3, EdgeList{{0, 0}}), InvalidInput);
  EXPECT_THROW(SimpleGraph(3, EdgeList{{0, 1}, {1, 0}}), InvalidInput);
  EXPECT_THROW(SimpleGraph(3, EdgeList{{0, 3}}), InvalidInput);
}

TEST(MaximumMatching, SpecExamples) {
  EXPECT_EQ(maximum_matching(cube()).size(), 4u);
  EXPECT_EQ(maximum_matching(SimpleGraph(1, {})).size(), 0u);
  EXPECT_EQ(maximum_matching(SimpleGraph(3, EdgeList{{0, 1}, {1, 2}})).size(), 1u);
  EXPECT_EQ(maximum_matching(SimpleGraph(0, {})).size(), 0u);
}

TEST(MaximumMatching, NeedsBlossomContraction) {
  // Two triangles joined by a path.
  const SimpleGraph g(8, EdgeList{{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 5}});
  const Matching m = maximum_matching(g);
  EXPECT_EQ(m.size(), 4u);
  EXPECT_TRUE(m.is_perfect());
  EXPECT_TRUE(is_valid_matching(g, m));
  // Petersen graph has a perfect matching.
  const SimpleGraph petersen(10, EdgeList{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},
                                          {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}});
  EXPECT_EQ(maximum_matching(petersen).size(), 5u);
}

TEST(MaximumMatching, AgreesWithBruteForceOnRandomGraphs) {
  std::mt19937 rng(20240601);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 10;
    const SimpleGraph g = random_graph(rng, n);
    const Matching m = maximum_matching(g);
    ASSERT_TRUE(is_valid_matching(g, m));
    ASSERT_EQ(m.size(), oracle::max_matching_size(n, g.edges())) << "trial " << trial;
  }
}

TEST(MaximumMatching, AgreesWithBruteForceOnKohlerGraphs) {
  for (const Group& g : oracle::groups_up_to(16)) {
    const SimpleGraph sg = build_graph(g).to_simple_graph();
    const Matching m = maximum_matching(sg);
    ASSERT_TRUE(is_valid_matching(sg, m));
    ASSERT_EQ(m.size(), oracle::max_matching_size(sg.vertex_count(), sg.edges())) << g.to_string();
  }
}

TEST(MaximumMatching, Deterministic) {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 20; ++trial) {
    const SimpleGraph g = random_graph(rng, 30);
    const Matching a = maximum_matching(g), b = maximum_matching(g);
    EXPECT_EQ(a.matched_edges, b.matched_edges);
    EXPECT_EQ(a.mate, b.mate);
  }
}

TEST(IsValidMatching, DetectsConflicts) {
  const SimpleGraph g(3, EdgeList{{0, 1}, {1, 2}});
  Matching bad;
  bad.matched_edges = {0, 1};
  bad.mate = {1, 0, 1};
  EXPECT_FALSE(is_valid_matching(g, bad));
  Matching wrong_size;
  EXPECT_FALSE(is_valid_matching(g, wrong_size));
}

TEST(OneFactor, SpecExamples) {
  const Group g44 = Group::make({4, 4});
  const KohlerGraph k44 = build_graph(g44);
  const auto f44 = one_factor(k44.to_simple_graph());
  ASSERT_TRUE(std::holds_alternative<Matching>(f44));
  EXPECT_EQ(std::get<Matching>(f44).size(), 4u);

  const auto f8 = one_factor(build_graph(Group::make({8})).to_simple_graph());
  ASSERT_TRUE(std::holds_alternative<NoPerfectMatching>(f8));
  EXPECT_TRUE(std::get<NoPerfectMatching>(f8).odd_component);
  EXPECT_EQ(std::get<NoPerfectMatching>(f8).component, std::vector<std::size_t>{0});

  const KohlerGraph k10 = build_graph(Group::make({10}));
  const auto f10 = one_factor(k10.to_simple_graph());
  ASSERT_TRUE(std::holds_alternative<Matching>(f10));
  EXPECT_EQ(std::get<Matching>(f10).matched_edges, std::vector<std::size_t>{0});
}

TEST(OneFactor, EvenComponentWithoutPerfectMatching) {
  // A star with three leaves: four vertices, one component, no 1-factor.
  const SimpleGraph star(4, EdgeList{{0, 1}, {0, 2}, {0, 3}});
  const auto r = one_factor(star);
  ASSERT_TRUE(std::holds_alternative<NoPerfectMatching>(r));
  EXPECT_FALSE(std::get<NoPerfectMatching>(r).odd_component);
  EXPECT_EQ(std::get<NoPerfectMatching>(r).component.size(), 4u);
}

TEST(ConnectedComponents, OrderedBySmallestVertex) {
  const SimpleGraph g(6, EdgeList{{4, 5}, {3, 1}, {0, 2}});
  const auto comps = connected_components(g);
  ASSERT_EQ(comps.size(), 3u);
  EXPECT_EQ(comps[0], (std::vector<std::size_t>{0, 2}));
  EXPECT_EQ(comps[1], (std::vector<std::size_t>{1, 3}));
  EXPECT_EQ(comps[2], (std::vector<std::size_t>{4, 5}));
}

// Cubic components spanned by non-cyclic subgroups in groups with a cyclic
// Sylow 2-subgroup have a 1-factor.
TEST(OneFactor, CubicComponentsOfCyclicSylowGroups) {
  for (const Group& g : oracle::groups_up_to(60)) {
    if (!g.is_sylow2_cyclic()) continue;
    const KohlerGraph kg = build_graph(g);
    for (const auto& comp : kg.connected_components()) {
      const Subset& b = kg.vertices()[comp.front()].base;
      const std::vector<Element> gens{b[1], b[2]};
      const auto sub = subgroup_generated(g, gens);
      bool cyclic = false;
      for (Element x : sub) cyclic = cyclic || static_cast<std::size_t>(g.element_order(x)) == sub.size();
      if (cyclic) continue;
      std::map<std::size_t, std::size_t> local;
      for (std::size_t i = 0; i < comp.size(); ++i) local[comp[i]] = i;
      EdgeList edges;
      for (const GraphEdge& e : kg.edges()) {
        if (local.contains(e.endpoints[0])) edges.emplace_back(local[e.endpoints[0]], local[e.endpoints[1]]);
      }
      ASSERT_TRUE(std::holds_alternative<Matching>(one_factor(SimpleGraph(comp.size(), edges))))
          << g.to_string();
    }
  }
}
