#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "gsp/bitset.hpp"
#include "gsp/errors.hpp"

namespace gsp {

// Vertices are dense indices 0..n-1 in declaration order.
using Vertex = std::uint32_t;
inline constexpr Vertex kNoVertex = static_cast<Vertex>(-1);

// A sequence of distinct vertices; a full ordering or a fragment of one.
using Sequence = std::vector<Vertex>;

// Vertex names in declaration order. Names are non-empty and whitespace-free.
class Universe {
 public:
  Universe() = default;
  explicit Universe(std::vector<std::string> names);

  // a, b, ..., z for n <= 26, otherwise v1, v2, ...
  static Universe alphabetic(std::size_t n);

  std::size_t size() const { return names_.size(); }
  const std::string& name(Vertex v) const;
  const std::vector<std::string>& names() const { return names_; }

  Vertex index(std::string_view name) const;  // throws LookupError
  std::optional<Vertex> find(std::string_view name) const;

  Sequence indices(std::span<const std::string> names) const;
  std::string join(std::span<const Vertex> seq, std::string_view sep = " ") const;

  friend bool operator==(const Universe& a, const Universe& b) { return a.names_ == b.names_; }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, Vertex> index_;
};

struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  // Stored with u < v.
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Simple undirected graph. Immutable once built.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n);
  // Throws std::invalid_argument on self-loops, duplicate edges or out-of-range endpoints.
  Graph(std::size_t n, std::span<const Edge> edges);

  static Graph complete(std::size_t n);

  std::size_t vertex_count() const { return adj_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  bool adjacent(Vertex a, Vertex b) const { return rows_[a].test(b); }
  std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
  const Bitset& neighbor_set(Vertex v) const { return rows_[v]; }
  std::size_t degree(Vertex v) const { return adj_[v].size(); }
  std::size_t max_degree() const;

  // Sorted by (u, v).
  const std::vector<Edge>& edges() const { return edges_; }

  // Adds the given edges, skipping those already present.
  Graph with_edges(std::span<const Edge> extra) const;
  // Makes `clique` pairwise adjacent.
  Graph with_clique(std::span<const Vertex> clique) const;
  // Subgraph induced by `keep`, relabelled so keep[i] becomes vertex i.
  Graph induced(std::span<const Vertex> keep) const;

  bool is_connected() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.vertex_count() == b.vertex_count() && a.edges_ == b.edges_;
  }

 private:
  std::vector<std::vector<Vertex>> adj_;
  std::vector<Bitset> rows_;
  std::vector<Edge> edges_;
};

// A permutation of 0..n-1 with its inverse. Index i holds the (i+1)-th vertex.
class Ordering {
 public:
  Ordering() = default;
  explicit Ordering(Sequence seq);  // throws std::invalid_argument unless a permutation

  static Ordering identity(std::size_t n);

  std::size_t size() const { return seq_.size(); }
  Vertex operator[](std::size_t i) const { return seq_[i]; }
  Vertex front() const { return seq_.front(); }
  Vertex back() const { return seq_.back(); }

  std::size_t rank(Vertex v) const { return rank_[v]; }           // 0-based
  std::size_t position(Vertex v) const { return rank_[v] + 1; }   // 1-based
  bool precedes(Vertex a, Vertex b) const { return rank_[a] < rank_[b]; }

  const Sequence& sequence() const { return seq_; }
  const std::vector<std::size_t>& ranks() const { return rank_; }
  auto begin() const { return seq_.begin(); }
  auto end() const { return seq_.end(); }

  friend bool operator==(const Ordering& a, const Ordering& b) { return a.seq_ == b.seq_; }
  friend auto operator<=>(const Ordering& a, const Ordering& b) { return a.seq_ <=> b.seq_; }

 private:
  Sequence seq_;
  std::vector<std::size_t> rank_;
};

// A non-empty list of orderings over a shared universe.
class Profile {
 public:
  Profile(Universe universe, std::vector<Ordering> orderings);

  const Universe& universe() const { return universe_; }
  std::size_t vertex_count() const { return universe_.size(); }
  std::size_t size() const { return orderings_.size(); }
  const std::vector<Ordering>& orderings() const { return orderings_; }
  const Ordering& operator[](std::size_t i) const { return orderings_[i]; }

  friend bool operator==(const Profile&, const Profile&) = default;

 private:
  Universe universe_;
  std::vector<Ordering> orderings_;
};

// A tree over a subset of a universe of size n. Non-members are isolated in graph().
class Tree {
 public:
  Tree() = default;
  // Spanning tree; throws std::invalid_argument unless `g` is a tree.
  explicit Tree(Graph g);
  // Tree on `members`; edges must stay inside the member set.
  Tree(std::size_t universe_size, std::vector<Vertex> members, std::span<const Edge> edges);

  const Graph& graph() const { return graph_; }
  std::size_t universe_size() const { return graph_.vertex_count(); }
  const std::vector<Vertex>& members() const { return members_; }
  bool contains(Vertex v) const { return v < member_.size() && member_[v]; }
  bool is_spanning() const { return members_.size() == graph_.vertex_count(); }
  const std::vector<Edge>& edges() const { return graph_.edges(); }

  // Vertices of the unique u-v path, from u to v.
  std::vector<Vertex> path(Vertex u, Vertex v) const;
  // Parent of each member when rooted at `root`; kNoVertex for the root and non-members.
  std::vector<Vertex> parents(Vertex root) const;
  // Edge distance from `from` to each member; -1 for non-members.
  std::vector<int> distances(Vertex from) const;

  friend bool operator==(const Tree& a, const Tree& b) {
    return a.members_ == b.members_ && a.graph_ == b.graph_;
  }
  friend bool operator<(const Tree& a, const Tree& b) {
    if (a.members_ != b.members_) return a.members_ < b.members_;
    return a.edges() < b.edges();
  }

 private:
  void check_member(Vertex v) const;

  Graph graph_;
  std::vector<Vertex> members_;
  std::vector<bool> member_;
};

// sigma_{<=i}: the first i vertices, 1 <= i <= n. Throws std::out_of_range otherwise.
Sequence ordering_prefix(const Ordering& sigma, std::size_t i);
// sigma minus the vertices of `removed`, relative order kept.
Sequence ordering_delete(const Ordering& sigma, std::span<const Vertex> removed);
// sigma_{<=u}: every vertex up to and including u.
Sequence ordering_up_to(const Ordering& sigma, Vertex u);
// Same deletion on an arbitrary fragment.
Sequence sequence_delete(std::span<const Vertex> seq, std::span<const Vertex> removed);

std::vector<Vertex> tree_path(const Tree& t, Vertex u, Vertex v);

// Throws std::invalid_argument if `seq` repeats a vertex or names one outside 0..n-1.
void require_distinct(std::span<const Vertex> seq, std::size_t n, std::string_view what);

}  // namespace gsp
