#include <gtest/gtest.h>

#include "corpus.hpp"
#include "gsp/attachment.hpp"
#include "gsp/errors.hpp"
#include "gsp/oracles.hpp"
#include "gsp/verifiers.hpp"

namespace gsp {
namespace {

using testing::ordering_of;
using testing::profile_of;

std::vector<Edge> path_edges(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex v = 1; v < n; ++v) e.emplace_back(v - 1, v);
  return e;
}

TEST(BlockerSet, Examples) {
  const std::vector<Vertex> abc{0, 1, 2}, ab{0, 1};
  EXPECT_EQ(blocker_set(ordering_of({0, 1, 2}), abc, 2), (std::vector<Vertex>{0, 1}));
  EXPECT_EQ(blocker_set(ordering_of({2, 1, 0}), abc, 2), std::vector<Vertex>{1});
  EXPECT_EQ(blocker_set(ordering_of({0, 1}), ab, 1), std::vector<Vertex>{0});

  const std::vector<Vertex> only{1};
  EXPECT_THROW(blocker_set(ordering_of({0, 1}), only, 1), std::invalid_argument);
  EXPECT_THROW(blocker_set(ordering_of({0, 1, 2}), ab, 2), std::invalid_argument);
}

TEST(AttachmentDigraph, SingleOrdering) {
  const AttachmentDigraph d = build_attachment_digraph(profile_of(3, {ordering_of({0, 1, 2})}));
  EXPECT_EQ(d.arcs(), (std::vector<Arc>{{0, 1}, {2, 0}, {2, 1}}));
  EXPECT_EQ(d.final_pair_arc(), (Arc{0, 1}));
  EXPECT_EQ(d.forced_vertices(), (std::vector<Vertex>{0, 1}));
  EXPECT_EQ(d.free_vertices(), std::vector<Vertex>{2});
}

TEST(AttachmentDigraph, OppositeOrderings) {
  const AttachmentDigraph d = build_attachment_digraph(profile_of(3, {ordering_of({0, 1, 2}), ordering_of({2, 1, 0})}));
  EXPECT_EQ(d.arcs(), (std::vector<Arc>{{0, 1}, {2, 1}}));
  EXPECT_FALSE(d.final_pair_arc());
  EXPECT_TRUE(d.free_vertices().empty());
}

TEST(AttachmentDigraph, TwoVertices) {
  for (const auto& orders : std::vector<std::vector<Ordering>>{{ordering_of({0, 1})},
                                                               {ordering_of({1, 0})},
                                                               {ordering_of({0, 1}), ordering_of({1, 0})}}) {
    const AttachmentDigraph d = build_attachment_digraph(profile_of(2, orders));
    EXPECT_EQ(d.arcs(), std::vector<Arc>{(Arc{0, 1})});
    EXPECT_EQ(d.forced_vertices().size(), 2u);
  }
}

TEST(AttachmentDigraph, SingleVertex) {
  const AttachmentDigraph d = build_attachment_digraph(profile_of(1, {ordering_of({0})}));
  EXPECT_TRUE(d.arcs().empty());
  EXPECT_TRUE(recognize_gs_tree(profile_of(1, {ordering_of({0})})).admits);
}

TEST(AttachmentDigraph, FirstVerticesAreForced) {
  std::mt19937_64 rng(41);
  for (int round = 0; round < 500; ++round) {
    const std::size_t n = 2 + round % 9;
    std::vector<Ordering> orders;
    for (std::size_t i = 0; i < 1 + round % 4; ++i) orders.push_back(testing::random_ordering(rng, n));
    const AttachmentDigraph d = build_attachment_digraph(profile_of(n, orders));
    for (const Ordering& o : orders) EXPECT_TRUE(d.is_forced(o.front()));
  }
}

// The final pair arc points from the lower index to the higher one. Relabelling
// the universe in reverse flips that choice; the underlying graph must not change.
TEST(AttachmentDigraph, UnderlyingGraphIgnoresFinalArcDirection) {
  std::mt19937_64 rng(43);
  for (int round = 0; round < 300; ++round) {
    const std::size_t n = 3 + round % 6;
    std::vector<Ordering> orders, flipped;
    for (std::size_t i = 0; i < 1 + round % 3; ++i) {
      orders.push_back(testing::random_ordering(rng, n));
      Sequence s = orders.back().sequence();
      for (Vertex& v : s) v = static_cast<Vertex>(n - 1 - v);
      flipped.emplace_back(std::move(s));
    }
    const Graph a = build_attachment_digraph(profile_of(n, orders)).underlying();
    const Graph b = build_attachment_digraph(profile_of(n, flipped)).underlying();
    std::vector<Edge> back;
    for (const Edge& e : b.edges()) back.emplace_back(n - 1 - e.u, n - 1 - e.v);
    EXPECT_EQ(a, Graph(n, back));
  }
}

TEST(ForcedSubtree, Examples) {
  auto tstar = [](const Profile& p) { return forced_subtree(build_attachment_digraph(p)); };

  auto t = tstar(profile_of(3, {ordering_of({0, 1, 2}), ordering_of({2, 1, 0})}));
  ASSERT_TRUE(t);
  EXPECT_EQ(t->edges(), path_edges(3));

  t = tstar(profile_of(3, {ordering_of({0, 1, 2})}));
  ASSERT_TRUE(t);
  EXPECT_EQ(t->members(), (std::vector<Vertex>{0, 1}));
  EXPECT_EQ(t->edges(), std::vector<Edge>{(Edge{0, 1})});

  t = tstar(profile_of(2, {ordering_of({1, 0})}));
  ASSERT_TRUE(t);
  EXPECT_EQ(t->edges(), std::vector<Edge>{(Edge{0, 1})});
}

TEST(RecognizeGsTree, Examples) {
  auto r = recognize_gs_tree(profile_of(3, {ordering_of({0, 1, 2}), ordering_of({2, 1, 0})}));
  ASSERT_TRUE(r.admits);
  EXPECT_EQ(r.witness->edges(), path_edges(3));

  // Each path on three vertices rejects one of the rotations: (c, a, b) on
  // a-b-c, (b, c, a) on b-a-c, (a, b, c) on a-c-b.
  const Profile rotations = profile_of(3, {ordering_of({0, 1, 2}), ordering_of({1, 2, 0}), ordering_of({2, 0, 1})});
  EXPECT_FALSE(recognize_gs_tree(rotations).admits);
  EXPECT_FALSE(brute_force_tree_support(rotations, Paradigm::GS));
  EXPECT_TRUE(build_attachment_digraph(rotations).arcs().empty());
}

// Connected attachment graph, but b, c and e are peeled off together with
// empty blocker sets, so none of them can be attached.
TEST(RecognizeGsTree, StrandedVertexMeansNo) {
  const Profile p = parse_profile("vertices: a b c d e\ne c d b a\ne b c a d\nc b a e d\n");
  const AttachmentDigraph d = build_attachment_digraph(p);
  EXPECT_EQ(d.arcs(), (std::vector<Arc>{{0, 1}, {0, 2}, {3, 2}, {3, 4}}));
  EXPECT_TRUE(d.underlying().is_connected());
  EXPECT_FALSE(attachment_admits_tree(d));
  EXPECT_FALSE(recognize_gs_tree(p).admits);
  EXPECT_TRUE(enumerate_gs_tree_supports(p).empty());
  EXPECT_FALSE(brute_force_tree_support(p, Paradigm::GS));
}

// Searches four-vertex profiles for ones whose attachment graph falls apart,
// then checks that no tree supports them.
TEST(RecognizeGsTree, DisconnectedAttachmentMeansNo) {
  std::mt19937_64 rng(37);
  std::size_t found = 0;
  for (int round = 0; round < 3000; ++round) {
    std::vector<Ordering> orders;
    for (int i = 0; i < 3 + round % 2; ++i) orders.push_back(testing::random_ordering(rng, 4));
    const Profile p = profile_of(4, orders);
    if (build_attachment_digraph(p).underlying().is_connected()) continue;
    ++found;
    EXPECT_FALSE(recognize_gs_tree(p).admits);
    EXPECT_FALSE(brute_force_tree_support(p, Paradigm::GS));
  }
  EXPECT_GT(found, 0u);
}

TEST(RecognizeGsTree, MatchesOracleOnThreeVertices) {
  const auto perms = testing::all_permutations(3);
  for (std::size_t i = 0; i < perms.size(); ++i)
    for (std::size_t j = i; j < perms.size(); ++j) {
      std::vector<Ordering> orders{perms[i]};
      if (j != i) orders.push_back(perms[j]);
      const Profile p = profile_of(3, orders);
      EXPECT_EQ(recognize_gs_tree(p).admits, brute_force_tree_support(p, Paradigm::GS).has_value());
      EXPECT_EQ(enumerate_gs_tree_supports(p), all_tree_supports(p, Paradigm::GS));
    }
}

TEST(EnumerateGsTreeSupports, Examples) {
  const auto single = enumerate_gs_tree_supports(profile_of(3, {ordering_of({0, 1, 2})}));
  ASSERT_EQ(single.size(), 2u);
  EXPECT_EQ(single[0].edges(), (std::vector<Edge>{{0, 1}, {0, 2}}));
  EXPECT_EQ(single[1].edges(), (std::vector<Edge>{{0, 1}, {1, 2}}));

  EXPECT_EQ(enumerate_gs_tree_supports(profile_of(3, {ordering_of({0, 1, 2}), ordering_of({2, 1, 0})})).size(), 1u);
  EXPECT_EQ(enumerate_gs_tree_supports(profile_of(2, {ordering_of({0, 1})})).size(), 1u);
}

TEST(EnumerateGsTreeSupports, MatchesOracleOnRandomProfiles) {
  std::mt19937_64 rng(47);
  for (int round = 0; round < 400; ++round) {
    const std::size_t n = 4 + round % 2;
    std::vector<Ordering> orders;
    for (int i = 0; i < 1 + round % 3; ++i) orders.push_back(testing::random_ordering(rng, n));
    const Profile p = profile_of(n, orders);
    const auto got = enumerate_gs_tree_supports(p);
    ASSERT_EQ(got, all_tree_supports(p, Paradigm::GS));
    const auto r = recognize_gs_tree(p);
    ASSERT_EQ(r.admits, !got.empty());
    if (r.admits) EXPECT_TRUE(std::binary_search(got.begin(), got.end(), *r.witness));
  }
}

TEST(EnumerateGsTreeSupports, FreeVertexCap) {
  Sequence s(12);
  std::iota(s.begin(), s.end(), Vertex{0});
  const Profile p = profile_of(12, {Ordering(s)});
  EXPECT_THROW(enumerate_gs_tree_supports(p, 4), SizeLimitError);
}

}  // namespace
}  // namespace gsp
