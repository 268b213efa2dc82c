#pragma once

// Test-side corpora and reference checks. Nothing here calls into the
// verifiers, so it can serve as an oracle for them.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "gsp/core.hpp"
#include "gsp/io.hpp"
#include "gsp/verifiers.hpp"

namespace gsp::testing {

// Every labelled graph on n vertices whose edge mask passes `keep`.
template <class Keep>
std::vector<Graph> labeled_graphs(std::size_t n, Keep keep) {
  std::vector<Edge> pairs;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  std::vector<Graph> out;
  const std::uint64_t total = std::uint64_t{1} << pairs.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if (mask >> i & 1) edges.push_back(pairs[i]);
    Graph g(n, edges);
    if (keep(g)) out.push_back(std::move(g));
  }
  return out;
}

inline std::vector<Graph> connected_graphs(std::size_t n) {
  return labeled_graphs(n, [](const Graph& g) { return g.is_connected(); });
}

inline std::vector<Ordering> all_permutations(std::size_t n) {
  Sequence s(n);
  std::iota(s.begin(), s.end(), Vertex{0});
  std::vector<Ordering> out;
  do out.emplace_back(s);
  while (std::next_permutation(s.begin(), s.end()));
  return out;
}

inline Ordering random_ordering(std::mt19937_64& rng, std::size_t n) {
  Sequence s(n);
  std::iota(s.begin(), s.end(), Vertex{0});
  std::shuffle(s.begin(), s.end(), rng);
  return Ordering(std::move(s));
}

inline Graph random_graph(std::mt19937_64& rng, std::size_t n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (coin(rng)) edges.emplace_back(u, v);
  return Graph(n, edges);
}

// Four-point conditions evaluated straight from their definitions, O(n^4).
inline std::optional<Triple> naive_violation(const Graph& g, const Ordering& s, FourPointProperty p) {
  const std::size_t n = s.size();
  auto adj = [&](std::size_t x, std::size_t y) { return g.adjacent(s[x], s[y]); };
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = b + 1; c < n; ++c) {
        if (!adj(a, c) || adj(a, b)) continue;
        bool found = false;
        for (std::size_t d = 0; d < n && !found; ++d) {
          if (d == b || !adj(d, b)) continue;
          switch (p) {
            case FourPointProperty::S: found = d < b; break;
            case FourPointProperty::B: found = d < a; break;
            case FourPointProperty::D: found = a < d && d < b; break;
            case FourPointProperty::LB: found = d < a && !adj(d, c); break;
            case FourPointProperty::LD: found = a < d && d < b && !adj(d, c); break;
            case FourPointProperty::M: found = d < b && !adj(d, c); break;
          }
        }
        if (!found) return Triple{s[a], s[b], s[c]};
      }
  return std::nullopt;
}

inline Profile profile_of(std::size_t n, std::vector<Ordering> orderings) {
  return Profile(Universe::alphabetic(n), std::move(orderings));
}

inline Ordering ordering_of(std::initializer_list<Vertex> xs) { return Ordering(Sequence(xs)); }

// K4 and the Petersen graph as reduction sources.
inline NamedGraph k4() { return NamedGraph{Universe::alphabetic(4), Graph::complete(4)}; }

inline NamedGraph petersen() {
  std::vector<Edge> e;
  for (Vertex i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);
    e.emplace_back(i, i + 5);
    e.emplace_back(i + 5, (i + 2) % 5 + 5);
  }
  std::vector<std::string> names;
  for (int i = 0; i < 10; ++i) names.push_back("p" + std::to_string(i));
  return NamedGraph{Universe(names), Graph(10, e)};
}

}  // namespace gsp::testing
