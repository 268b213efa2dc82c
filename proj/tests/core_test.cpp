#include <gtest/gtest.h>

#include "corpus.hpp"
#include "gsp/core.hpp"
#include "gsp/errors.hpp"
#include "gsp/io.hpp"

namespace gsp {
namespace {

class OrderingOps : public ::testing::Test {
 protected:
  Universe u{{"a", "b", "c", "v", "d"}};
  Ordering sigma{parse_sequence(u, "c a b v d")};

  std::string names(const Sequence& s) const { return u.join(s); }
};

TEST_F(OrderingOps, Prefix) {
  EXPECT_EQ(names(ordering_prefix(sigma, 3)), "c a b");
  EXPECT_EQ(names(ordering_prefix(sigma, 5)), "c a b v d");
  EXPECT_THROW(ordering_prefix(sigma, 0), std::out_of_range);
  EXPECT_THROW(ordering_prefix(sigma, 6), std::out_of_range);

  EXPECT_EQ(ordering_prefix(Ordering::identity(1), 1), Sequence{0});
  EXPECT_EQ(ordering_prefix(Ordering::identity(2), 2), (Sequence{0, 1}));
}

TEST_F(OrderingOps, Delete) {
  const Sequence removed = parse_sequence(u, "a v");
  EXPECT_EQ(names(ordering_delete(sigma, removed)), "c b d");

  const Ordering abc = Ordering::identity(3);
  EXPECT_EQ(ordering_delete(abc, {}), (Sequence{0, 1, 2}));
  const Sequence all{0, 1, 2};
  EXPECT_TRUE(ordering_delete(abc, all).empty());
}

TEST_F(OrderingOps, UpTo) {
  EXPECT_EQ(names(ordering_up_to(sigma, u.index("b"))), "c a b");
  EXPECT_EQ(ordering_up_to(Ordering::identity(2), 0), Sequence{0});
  EXPECT_EQ(ordering_up_to(Ordering::identity(3), 2), (Sequence{0, 1, 2}));
  EXPECT_THROW(ordering_up_to(sigma, 9), LookupError);
}

TEST_F(OrderingOps, DeletingSuffixGivesPrefix) {
  for (std::size_t i = 1; i <= sigma.size(); ++i) {
    const Sequence suffix(sigma.begin() + static_cast<std::ptrdiff_t>(i), sigma.end());
    EXPECT_EQ(ordering_delete(sigma, suffix), ordering_prefix(sigma, i)) << "i=" << i;
  }
}

TEST_F(OrderingOps, Positions) {
  EXPECT_EQ(sigma.position(u.index("c")), 1u);
  EXPECT_EQ(sigma.position(u.index("d")), 5u);
  EXPECT_EQ(sigma.rank(u.index("b")), 2u);
  EXPECT_TRUE(sigma.precedes(u.index("a"), u.index("v")));
  for (std::size_t i = 0; i < sigma.size(); ++i) EXPECT_EQ(sigma.position(sigma[i]), i + 1);
}

TEST(OrderingTest, RejectsNonPermutations) {
  EXPECT_THROW(Ordering(Sequence{0, 0, 1}), std::invalid_argument);
  EXPECT_THROW(Ordering(Sequence{0, 3, 1}), std::invalid_argument);
  EXPECT_NO_THROW(Ordering(Sequence{}));
}

TEST(UniverseTest, NamesAndIndices) {
  Universe u({"x", "y", "z"});
  EXPECT_EQ(u.index("y"), 1u);
  EXPECT_EQ(u.name(2), "z");
  EXPECT_FALSE(u.find("w"));
  EXPECT_THROW(u.index("w"), LookupError);
  EXPECT_THROW(u.name(3), LookupError);
  EXPECT_THROW(Universe({"x", "x"}), std::invalid_argument);
  EXPECT_THROW(Universe({"has space"}), std::invalid_argument);

  EXPECT_EQ(Universe::alphabetic(3).names(), (std::vector<std::string>{"a", "b", "c"}));
  EXPECT_EQ(Universe::alphabetic(27).name(26), "v27");
}

TEST(GraphTest, RejectsBadEdges) {
  const std::vector<Edge> loop{{1, 1}};
  const std::vector<Edge> dup{{0, 1}, {1, 0}};
  const std::vector<Edge> out{{0, 3}};
  EXPECT_THROW(Graph(3, loop), std::invalid_argument);
  EXPECT_THROW(Graph(3, dup), std::invalid_argument);
  EXPECT_THROW(Graph(3, out), std::invalid_argument);
}

TEST(GraphTest, NeighbourhoodsAreSymmetric) {
  std::mt19937_64 rng(7);
  for (int round = 0; round < 50; ++round) {
    const Graph g = testing::random_graph(rng, 8, 0.4);
    std::size_t degree_sum = 0;
    for (Vertex v = 0; v < 8; ++v) {
      EXPECT_EQ(g.degree(v), g.neighbors(v).size());
      EXPECT_EQ(g.degree(v), g.neighbor_set(v).count());
      degree_sum += g.degree(v);
      for (Vertex w : g.neighbors(v)) EXPECT_TRUE(g.adjacent(w, v));
    }
    EXPECT_EQ(degree_sum, 2 * g.edge_count());
  }
}

TEST(GraphTest, Derived) {
  const std::vector<Edge> p4{{0, 1}, {1, 2}, {2, 3}};
  const Graph g(4, p4);
  EXPECT_TRUE(g.is_connected());
  EXPECT_EQ(g.max_degree(), 2u);

  const std::vector<Edge> more{{0, 1}, {0, 3}};
  EXPECT_EQ(g.with_edges(more).edge_count(), 4u);
  const std::vector<Vertex> clique{0, 2, 3};
  EXPECT_EQ(g.with_clique(clique).edge_count(), 5u);

  const std::vector<Vertex> keep{0, 2, 3};
  const Graph h = g.induced(keep);
  EXPECT_EQ(h.vertex_count(), 3u);
  EXPECT_EQ(h.edges(), (std::vector<Edge>{{1, 2}}));
  EXPECT_FALSE(h.is_connected());

  EXPECT_EQ(Graph::complete(5).edge_count(), 10u);
}

TEST(TreeTest, Paths) {
  const std::vector<Edge> path{{0, 1}, {1, 2}};
  const Tree t{Graph(3, path)};
  EXPECT_EQ(tree_path(t, 0, 2), (std::vector<Vertex>{0, 1, 2}));
  EXPECT_EQ(tree_path(t, 1, 1), std::vector<Vertex>{1});

  // star centred at 0 with leaves 1, 2, 3
  const std::vector<Edge> star{{0, 1}, {0, 2}, {0, 3}};
  const Tree s{Graph(4, star)};
  EXPECT_EQ(tree_path(s, 1, 2), (std::vector<Vertex>{1, 0, 2}));
  EXPECT_THROW(tree_path(s, 1, 7), LookupError);
}

TEST(TreeTest, PathReversalOnRandomTrees) {
  std::mt19937_64 rng(11);
  for (int round = 0; round < 40; ++round) {
    std::vector<Edge> edges;
    for (Vertex v = 1; v < 9; ++v) edges.emplace_back(std::uniform_int_distribution<Vertex>(0, v - 1)(rng), v);
    const Tree t{Graph(9, edges)};
    for (Vertex a = 0; a < 9; ++a)
      for (Vertex b = 0; b < 9; ++b) {
        auto ab = t.path(a, b), ba = t.path(b, a);
        std::reverse(ba.begin(), ba.end());
        EXPECT_EQ(ab, ba);
        EXPECT_EQ(static_cast<int>(ab.size()) - 1, t.distances(a)[b]);
      }
  }
}

TEST(TreeTest, RejectsNonTrees) {
  const std::vector<Edge> cycle{{0, 1}, {1, 2}, {0, 2}};
  EXPECT_THROW(Tree{Graph(3, cycle)}, std::invalid_argument);
  const std::vector<Edge> forest{{0, 1}};
  EXPECT_THROW(Tree{Graph(3, forest)}, std::invalid_argument);
}

TEST(TreeTest, SubsetTree) {
  const std::vector<Edge> edges{{1, 3}};
  const Tree t(5, {1, 3}, edges);
  EXPECT_FALSE(t.is_spanning());
  EXPECT_TRUE(t.contains(3));
  EXPECT_FALSE(t.contains(0));
  EXPECT_EQ(t.path(3, 1), (std::vector<Vertex>{3, 1}));
  EXPECT_THROW(t.path(0, 1), LookupError);
}

TEST(ProfileTest, Validation) {
  EXPECT_THROW(Profile(Universe::alphabetic(3), {}), std::invalid_argument);
  EXPECT_THROW(Profile(Universe::alphabetic(3), {Ordering::identity(2)}), std::invalid_argument);
  const Profile p(Universe::alphabetic(3), {Ordering::identity(3)});
  EXPECT_EQ(p.size(), 1u);
  EXPECT_EQ(p.vertex_count(), 3u);
}

}  // namespace
}  // namespace gsp
