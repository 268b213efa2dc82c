#pragma once

#include <optional>
#include <span>
#include <vector>

#include "gsp/core.hpp"

namespace gsp {

struct Arc {
  Vertex from, to;
  friend auto operator<=>(const Arc&, const Arc&) = default;
};

// Arc v -> u means u is a possible tree neighbour of v at the moment v is
// peeled off the bottom of the orderings.
class AttachmentDigraph {
 public:
  AttachmentDigraph(std::size_t n, std::vector<Arc> arcs, std::optional<Arc> final_pair_arc);

  std::size_t vertex_count() const { return out_.size(); }
  const std::vector<Arc>& arcs() const { return arcs_; }  // sorted
  std::span<const Vertex> out_neighbors(Vertex v) const { return out_[v]; }
  std::size_t out_degree(Vertex v) const { return out_[v].size(); }

  // Out-degree at most one.
  bool is_forced(Vertex v) const { return out_[v].size() <= 1; }
  const std::vector<bool>& forced_mask() const { return forced_; }
  std::vector<Vertex> forced_vertices() const;
  std::vector<Vertex> free_vertices() const;

  // Arc added between the last two remaining vertices, if any.
  const std::optional<Arc>& final_pair_arc() const { return final_pair_arc_; }

  // Underlying undirected graph.
  Graph underlying() const;

 private:
  std::vector<Arc> arcs_;
  std::vector<std::vector<Vertex>> out_;
  std::vector<bool> forced_;
  std::optional<Arc> final_pair_arc_;
};

// B(sigma, S, x): the S-vertices before x, or the second S-vertex when x comes
// first. Throws std::invalid_argument if x is not in S, or if x is first and S
// has no second vertex.
std::vector<Vertex> blocker_set(const Ordering& sigma, std::span<const Vertex> s, Vertex x);

AttachmentDigraph build_attachment_digraph(const Profile& profile);

// The tree induced on the forced vertices, or nothing if that subgraph is not a tree.
std::optional<Tree> forced_subtree(const AttachmentDigraph& d);

// Connected, with exactly one vertex lacking an out-arc.
bool attachment_admits_tree(const AttachmentDigraph& d);

struct GsTreeOutcome {
  bool admits = false;
  std::optional<Tree> witness;
};

// Yes iff attachment_admits_tree. The witness keeps the lowest-index out-arc
// of every vertex.
GsTreeOutcome recognize_gs_tree(const Profile& profile);

// Every tree obtained by keeping one out-arc per vertex, sorted and deduplicated.
// Throws SizeLimitError if more than `free_cap` vertices are free.
std::vector<Tree> enumerate_gs_tree_supports(const Profile& profile, std::size_t free_cap = 16);

}  // namespace gsp
