#pragma once

#include <optional>
#include <string_view>

#include "gsp/core.hpp"
#include "gsp/traversals.hpp"

namespace gsp {

// Four-point conditions. For every a < b < c in the ordering with ac an edge
// and ab a non-edge there must be a vertex d adjacent to b such that:
//   S:  d < b
//   B:  d < a
//   D:  a < d < b
//   LB: d < a and d not adjacent to c
//   LD: a < d < b and d not adjacent to c
//   M:  d < b and d not adjacent to c
enum class FourPointProperty { S, B, D, LB, LD, M };

std::string_view to_string(FourPointProperty p);
Paradigm paradigm_of(FourPointProperty p);
// Empty for MCS, which has no four-point characterisation.
std::optional<FourPointProperty> property_of(Paradigm p);

struct Triple {
  Vertex a, b, c;
  friend bool operator==(const Triple&, const Triple&) = default;
};

struct PropertyCheck {
  bool holds = true;
  // The violating (a, b, c) earliest in (pos a, pos b, pos c) order.
  std::optional<Triple> violation;
  explicit operator bool() const { return holds; }
};

PropertyCheck satisfies_property(const Graph& g, const Ordering& sigma, FourPointProperty p);

// Four-point check for every paradigm except MCS, which is simulated.
bool is_s_ordering(const Graph& g, const Ordering& sigma, Paradigm p);

// Replays the labels and checks that each vertex was eligible when visited.
bool certify_by_simulation(const Graph& g, const Ordering& sigma, Paradigm p);
// Step (0-based) at which the ordering first picks an ineligible vertex.
std::optional<std::size_t> first_simulation_failure(const Graph& g, const Ordering& sigma, Paradigm p);

// In a BFS-type ordering every vertex between sigma(1) and a neighbour of
// sigma(1) is itself a neighbour of sigma(1).
bool bfs_first_vertex_check(const Graph& g, const Ordering& sigma);

}  // namespace gsp
