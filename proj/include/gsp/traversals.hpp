#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "gsp/core.hpp"

namespace gsp {

enum class Paradigm { GS, BFS, DFS, LexBFS, LexDFS, MCS, MNS };

inline constexpr std::array<Paradigm, 7> kAllParadigms = {Paradigm::GS,     Paradigm::BFS, Paradigm::DFS,
                                                          Paradigm::LexBFS, Paradigm::LexDFS, Paradigm::MCS,
                                                          Paradigm::MNS};

std::string_view to_string(Paradigm p);
// Case-insensitive: gs, bfs, dfs, lexbfs, lexdfs, mcs, mns.
std::optional<Paradigm> parse_paradigm(std::string_view s);

// Label state of a graph search after a sequence of visits.
//
// Labels follow the generic search template: visiting the i-th vertex updates
// its unvisited neighbours (BFS: max(label, n-i); DFS: i; LexBFS: append n-i;
// LexDFS: prepend i; MCS: +1; MNS: add i to a set). The next vertex must carry
// a maximum label; for MNS maximal under inclusion. For GS, any unvisited vertex
// with a visited neighbour qualifies, or any vertex when there is none.
//
// The lexicographic paradigms keep labels implicitly as an ordered partition
// of the unvisited vertices, so a step costs O(deg) rather than O(n).
//
// Holds a pointer to the graph; the graph must outlive the state.
class SearchState {
 public:
  SearchState(const Graph& g, Paradigm p);

  Paradigm paradigm() const { return paradigm_; }
  std::size_t visited_count() const { return step_; }
  bool done() const { return step_ == n_; }
  bool visited(Vertex v) const { return visited_[v]; }

  bool is_candidate(Vertex v) const;
  std::vector<Vertex> candidates() const;  // ascending
  Vertex lowest_candidate() const;         // kNoVertex when done

  // Throws std::invalid_argument if v is visited or out of range. Does not
  // require v to be a candidate.
  void visit(Vertex v);

 private:
  void visit_numeric(Vertex v);
  void visit_partition(Vertex v);
  void visit_mns(Vertex v);
  std::uint32_t new_class();
  void unlink_class(std::uint32_t c);
  void bump(Vertex u, std::uint32_t value);

  const Graph* g_;
  Paradigm paradigm_;
  std::size_t n_;
  std::size_t step_ = 0;
  std::vector<bool> visited_;

  // GS, BFS, DFS, MCS: integer labels with a histogram over unvisited vertices.
  std::vector<std::uint32_t> label_;
  std::vector<std::uint32_t> histogram_;
  std::uint32_t max_label_ = 0;

  // LexBFS, LexDFS: classes in a doubly linked list, highest label first.
  static constexpr std::uint32_t kNil = static_cast<std::uint32_t>(-1);
  std::vector<std::uint32_t> class_of_;
  std::vector<std::uint32_t> class_size_, class_prev_, class_next_, class_split_;
  std::uint32_t head_ = kNil;

  // MNS: set of visited neighbours.
  std::vector<Bitset> mns_label_;
};

// Vertices eligible after visiting `prefix`. Throws std::invalid_argument if
// the prefix repeats a vertex or leaves the universe.
std::vector<Vertex> step_candidates(const Graph& g, std::span<const Vertex> prefix, Paradigm p);

// One ordering, lowest index among candidates at every step. Requires n >= 1.
Ordering generate_ordering(const Graph& g, Paradigm p, std::optional<Vertex> start = std::nullopt);

// All orderings, sorted lexicographically. Throws SizeLimitError above `cap` vertices.
std::vector<Ordering> enumerate_orderings(const Graph& g, Paradigm p, std::size_t cap = 8);

// Completes `prefix` (vertex set A) by searching G with A made a clique:
// replay A, continue lowest-index-first, and append the continuation.
Ordering complete_prefix(const Graph& g, std::span<const Vertex> prefix, Paradigm p);

// True iff `prefix` is the beginning of some p-ordering of g.
bool is_partial_ordering(const Graph& g, std::span<const Vertex> prefix, Paradigm p);

}  // namespace gsp
