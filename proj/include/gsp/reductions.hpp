#pragma once

#include <functional>
#include <iosfwd>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gsp/core.hpp"
#include "gsp/io.hpp"
#include "gsp/traversals.hpp"

namespace gsp {

enum class Bound { Edge, Degree };

std::string_view to_string(Bound b);
// "edge", "deg" or "degree".
std::optional<Bound> parse_bound(std::string_view s);

// Clique on p vertices v1..vp, each with q pendants f<i>.<j>.
NamedGraph build_drone(std::size_t p, std::size_t q);

// Support-recognition instance built from a cubic graph G and a cover size
// kappa. Orderings are produced on demand: the degree-bounded BFS families run
// to millions of orderings and are never held in memory at once.
class ReductionInstance {
 public:
  struct Group {
    std::string label;
    std::size_t count;
    std::function<void(std::size_t, Sequence&)> fill;
  };

  ReductionInstance(Paradigm p, Bound b, NamedGraph source, std::size_t kappa, std::string construction,
                    Universe universe, Graph base, Vertex hub, std::vector<Vertex> source_map, long long k,
                    std::vector<Vertex> hub_pendants, std::vector<Group> groups);

  Paradigm paradigm() const { return paradigm_; }
  Bound bound() const { return bound_; }
  std::size_t kappa() const { return kappa_; }
  const std::string& construction() const { return construction_; }
  const NamedGraph& source() const { return source_; }

  const Universe& universe() const { return universe_; }
  std::size_t vertex_count() const { return universe_.size(); }
  // The fixed part of every candidate support, before the cover is wired to the hub.
  const Graph& base_graph() const { return base_; }
  // The vertex z that gets joined to the cover.
  Vertex hub() const { return hub_; }
  // Source vertex i is instance vertex source_map()[i].
  const std::vector<Vertex>& source_map() const { return source_map_; }
  // Pendants of the hub in the degree-bounded variants; empty otherwise.
  const std::vector<Vertex>& hub_pendants() const { return hub_pendants_; }
  long long k() const { return k_; }

  const std::vector<Group>& groups() const { return groups_; }
  std::size_t ordering_count() const { return total_; }
  void ordering_into(std::size_t index, Sequence& out) const;
  Sequence ordering(std::size_t index) const;

  // Materialises every ordering. Throws SizeLimitError above `limit`.
  Profile to_profile(std::size_t limit = 100000) const;

  std::vector<std::pair<std::string, std::string>> meta() const;

 private:
  Paradigm paradigm_;
  Bound bound_;
  NamedGraph source_;
  std::size_t kappa_;
  std::string construction_;
  Universe universe_;
  Graph base_;
  Vertex hub_;
  std::vector<Vertex> source_map_;
  long long k_;
  std::vector<Vertex> hub_pendants_;
  std::vector<Group> groups_;
  std::vector<std::size_t> offsets_;
  std::size_t total_ = 0;
};

// Requires G cubic with n >= 4 and kappa >= 2; LexDFS also needs n >= 10 and
// 3 <= kappa <= n-1. GS has no construction. Violations throw std::invalid_argument.
ReductionInstance reduce(Paradigm p, Bound b, const NamedGraph& g, std::size_t kappa);

// The base graph with the hub joined to every cover vertex (given as source indices).
Graph supporting_graph(const ReductionInstance& inst, std::span<const Vertex> cover);

struct ForwardReport {
  bool orderings_ok = true;
  bool bound_ok = true;
  std::size_t checked = 0;
  std::optional<std::size_t> first_failure;
  std::size_t edges = 0;
  std::size_t max_degree = 0;
  bool ok() const { return orderings_ok && bound_ok; }
};

// Builds the support graph from `cover` and checks that it meets the bound and
// that every ordering of the instance is an ordering of it. Throws
// std::invalid_argument if `cover` misses a source edge.
ForwardReport validate_forward(const ReductionInstance& inst, std::span<const Vertex> cover, std::size_t threads = 1);

// Profile text with a `k:` line and `# key: value` metadata; parses back with
// parse_profile_document.
void write_instance(std::ostream& out, const ReductionInstance& inst);

}  // namespace gsp
