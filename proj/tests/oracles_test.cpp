#include <gtest/gtest.h>

#include <set>

#include "corpus.hpp"
#include "gsp/errors.hpp"
#include "gsp/oracles.hpp"
#include "gsp/verifiers.hpp"

namespace gsp {
namespace {

using testing::ordering_of;
using testing::profile_of;

bool supports(const Graph& g, const Profile& p, Paradigm s) {
  for (const Ordering& o : p.orderings())
    if (!is_s_ordering(g, o, s)) return false;
  return true;
}

TEST(Prufer, CayleyCounts) {
  for (std::size_t n : {1u, 2u, 3u, 4u, 5u, 6u}) {
    const auto trees = all_labeled_trees(n);
    std::size_t expected = 1;
    for (std::size_t i = 2; i < n; ++i) expected *= n;
    EXPECT_EQ(trees.size(), expected) << n;
    EXPECT_EQ(std::set<Tree>(trees.begin(), trees.end()).size(), expected) << n;
  }
}

TEST(Prufer, Decode) {
  const std::vector<Vertex> seq{3, 3};
  EXPECT_EQ(prufer_decode(seq, 4).edges(), (std::vector<Edge>{{0, 3}, {1, 3}, {2, 3}}));
  const std::vector<Vertex> bad{4, 0};
  EXPECT_THROW(prufer_decode(bad, 4), std::invalid_argument);
  EXPECT_THROW(prufer_decode(seq, 3), std::invalid_argument);
}

TEST(Prufer, EarlyStop) {
  std::size_t seen = 0;
  for_each_labeled_tree(5, [&](const Tree&) { return ++seen < 10; });
  EXPECT_EQ(seen, 10u);
}

TEST(TreeSupport, Examples) {
  auto t = brute_force_tree_support(profile_of(3, {ordering_of({0, 1, 2}), ordering_of({2, 1, 0})}), Paradigm::DFS);
  ASSERT_TRUE(t);
  EXPECT_EQ(t->edges(), (std::vector<Edge>{{0, 1}, {1, 2}}));

  EXPECT_FALSE(brute_force_tree_support(
      profile_of(3, {ordering_of({0, 1, 2}), ordering_of({1, 2, 0}), ordering_of({2, 0, 1})}), Paradigm::DFS));

  EXPECT_THROW(brute_force_tree_support(profile_of(9, {Ordering::identity(9)}), Paradigm::DFS), SizeLimitError);
}

TEST(GraphSupport, Examples) {
  std::mt19937_64 rng(71);
  for (Paradigm s : kAllParadigms)
    for (std::size_t n = 2; n <= 5; ++n) {
      const Profile p = profile_of(n, {testing::random_ordering(rng, n), testing::random_ordering(rng, n)});
      const auto g = brute_force_graph_support(p, s, ProblemKind::edge_bounded(static_cast<long long>(n * (n - 1) / 2)));
      ASSERT_TRUE(g) << to_string(s);
      EXPECT_TRUE(supports(*g, p, s));
    }

  // The path a-b-c works, but the star at a comes first in edge order and
  // (a, b, c) is a DFS walk of it too.
  const Profile single = profile_of(3, {ordering_of({0, 1, 2})});
  auto g = brute_force_graph_support(single, Paradigm::DFS, ProblemKind::edge_bounded(2));
  ASSERT_TRUE(g);
  EXPECT_EQ(g->edges(), (std::vector<Edge>{{0, 1}, {0, 2}}));
  const std::vector<Edge> path{{0, 1}, {1, 2}};
  EXPECT_TRUE(supports(Graph(3, path), single, Paradigm::DFS));
  EXPECT_FALSE(brute_force_graph_support(single, Paradigm::DFS, ProblemKind::edge_bounded(1)));

  g = brute_force_graph_support(profile_of(3, {ordering_of({0, 1, 2}), ordering_of({0, 2, 1})}), Paradigm::GS,
                                ProblemKind::edge_bounded(2));
  ASSERT_TRUE(g);
  EXPECT_EQ(g->edges(), (std::vector<Edge>{{0, 1}, {0, 2}}));
}

TEST(GraphSupport, Errors) {
  const Profile p = profile_of(3, {ordering_of({0, 1, 2})});
  EXPECT_THROW(brute_force_graph_support(p, Paradigm::DFS, ProblemKind::edge_bounded(-1)), std::invalid_argument);
  const Profile big = profile_of(7, {Ordering::identity(7)});
  EXPECT_THROW(brute_force_graph_support(big, Paradigm::DFS, ProblemKind::edge_bounded(3)), SizeLimitError);
  EXPECT_THROW(brute_force_graph_support(big, Paradigm::DFS, ProblemKind::degree_bounded(3)), SizeLimitError);
}

TEST(GraphSupport, MonotoneAndMinimal) {
  std::mt19937_64 rng(73);
  for (int round = 0; round < 60; ++round) {
    const std::size_t n = 3 + round % 2;
    const Paradigm s = kAllParadigms[rng() % kAllParadigms.size()];
    const Profile p = profile_of(n, {testing::random_ordering(rng, n), testing::random_ordering(rng, n)});
    bool previous = false;
    for (long long k = 0; k <= static_cast<long long>(n * (n - 1) / 2); ++k) {
      const auto g = brute_force_graph_support(p, s, ProblemKind::edge_bounded(k));
      if (previous) EXPECT_TRUE(g) << "k=" << k;
      if (g) {
        EXPECT_TRUE(supports(*g, p, s));
        EXPECT_LE(static_cast<long long>(g->edge_count()), k);
        if (!previous) EXPECT_EQ(static_cast<long long>(g->edge_count()), k);
      }
      previous = g.has_value();
    }
    EXPECT_TRUE(previous);
  }
}

TEST(GraphSupport, DegreeBoundWitnesses) {
  std::mt19937_64 rng(79);
  for (int round = 0; round < 40; ++round) {
    const std::size_t n = 4 + round % 2;
    const Paradigm s = kAllParadigms[rng() % kAllParadigms.size()];
    const Profile p = profile_of(n, {testing::random_ordering(rng, n), testing::random_ordering(rng, n)});
    for (long long k = 1; k < static_cast<long long>(n); ++k) {
      const auto g = brute_force_graph_support(p, s, ProblemKind::degree_bounded(k));
      if (!g) continue;
      EXPECT_LE(static_cast<long long>(g->max_degree()), k);
      EXPECT_TRUE(supports(*g, p, s));
    }
    EXPECT_TRUE(brute_force_graph_support(p, s, ProblemKind::degree_bounded(static_cast<long long>(n) - 1)));
  }
}

TEST(GraphSupport, TreeSupportRoutesToTreeSearch) {
  const Profile p = profile_of(3, {ordering_of({0, 1, 2}), ordering_of({2, 1, 0})});
  const auto g = brute_force_graph_support(p, Paradigm::DFS, ProblemKind::tree_support());
  ASSERT_TRUE(g);
  EXPECT_EQ(g->edges(), (std::vector<Edge>{{0, 1}, {1, 2}}));
}

TEST(TreeSupport, LexDfsImpliesDfsAndMns) {
  std::mt19937_64 rng(83);
  for (int round = 0; round < 400; ++round) {
    const std::size_t n = 4 + round % 2;
    const Profile p = profile_of(n, {testing::random_ordering(rng, n), testing::random_ordering(rng, n)});
    if (!brute_force_tree_support(p, Paradigm::LexDFS)) continue;
    EXPECT_TRUE(brute_force_tree_support(p, Paradigm::DFS));
    EXPECT_TRUE(brute_force_tree_support(p, Paradigm::MNS));
  }
}

TEST(VertexCover, Examples) {
  EXPECT_EQ(min_vertex_cover(Graph::complete(4)), (std::vector<Vertex>{0, 1, 2}));
  const std::vector<Edge> edge{{0, 1}};
  EXPECT_EQ(min_vertex_cover(Graph(2, edge)), std::vector<Vertex>{0});
  const std::vector<Edge> c5{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}};
  EXPECT_EQ(min_vertex_cover(Graph(5, c5)).size(), 3u);
  EXPECT_EQ(min_vertex_cover(testing::petersen().graph).size(), 6u);
  EXPECT_TRUE(min_vertex_cover(Graph(3)).empty());
  EXPECT_THROW(min_vertex_cover(Graph(21)), SizeLimitError);
}

TEST(VertexCover, Check) {
  const std::vector<Edge> c5{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}};
  const Graph g(5, c5);
  const std::vector<Vertex> good{0, 2, 3}, bad{0, 2}, outside{9};
  EXPECT_TRUE(is_vertex_cover(g, good));
  EXPECT_FALSE(is_vertex_cover(g, bad));
  EXPECT_THROW(is_vertex_cover(g, outside), LookupError);
}

}  // namespace
}  // namespace gsp
