#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "gsp/core.hpp"
#include "gsp/traversals.hpp"

namespace gsp {

// Labelled tree from a Pruefer sequence of length n-2 over 0..n-1.
Tree prufer_decode(std::span<const Vertex> seq, std::size_t n);

// Calls `visit` on every labelled tree on n vertices, in lexicographic order of
// Pruefer sequences, until it returns false. n >= 1.
void for_each_labeled_tree(std::size_t n, const std::function<bool(const Tree&)>& visit);

std::vector<Tree> all_labeled_trees(std::size_t n);

// First tree, in Pruefer order, supporting every ordering of the profile.
std::optional<Tree> brute_force_tree_support(const Profile& profile, Paradigm p, std::size_t cap = 8);

// Every supporting tree, sorted.
std::vector<Tree> all_tree_supports(const Profile& profile, Paradigm p, std::size_t cap = 8);

struct ProblemKind {
  enum class Kind { EdgeBounded, DegreeBounded, TreeSupport };
  Kind kind = Kind::TreeSupport;
  long long k = 0;

  static ProblemKind edge_bounded(long long k) { return {Kind::EdgeBounded, k}; }
  static ProblemKind degree_bounded(long long k) { return {Kind::DegreeBounded, k}; }
  static ProblemKind tree_support() { return {Kind::TreeSupport, 0}; }
};

struct BruteForceCaps {
  std::size_t edge_bounded = 5;
  std::size_t degree_bounded = 6;
  std::size_t tree = 8;
};

// Exhaustive search for a connected graph supporting every ordering within the bound.
// Edge-bounded search tries edge counts 0..k in turn, so the witness has the
// fewest edges possible. Throws std::invalid_argument for negative k and
// SizeLimitError above the caps.
std::optional<Graph> brute_force_graph_support(const Profile& profile, Paradigm p, ProblemKind problem,
                                               BruteForceCaps caps = {});

// Lexicographically least vertex cover of minimum size. n <= cap.
std::vector<Vertex> min_vertex_cover(const Graph& g, std::size_t cap = 20);

bool is_vertex_cover(const Graph& g, std::span<const Vertex> cover);

}  // namespace gsp
