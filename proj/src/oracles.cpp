#include "gsp/oracles.hpp"

#include <algorithm>

#include "gsp/verifiers.hpp"

namespace gsp {

Tree prufer_decode(std::span<const Vertex> seq, std::size_t n) {
  if (n == 0) throw std::invalid_argument("a tree needs at least one vertex");
  if (seq.size() + 2 != n && !(n == 1 && seq.empty()))
    throw std::invalid_argument("Pruefer sequence must have length n-2");
  std::vector<std::size_t> degree(n, 1);
  for (Vertex x : seq) {
    if (x >= n) throw std::invalid_argument("Pruefer entry outside 0..n-1");
    ++degree[x];
  }
  std::vector<Edge> edges;
  for (Vertex x : seq) {
    Vertex leaf = 0;
    while (degree[leaf] != 1) ++leaf;
    edges.emplace_back(leaf, x);
    --degree[leaf];
    --degree[x];
  }
  if (n >= 2) {
    Vertex a = kNoVertex;
    for (Vertex v = 0; v < n; ++v)
      if (degree[v] == 1) {
        if (a == kNoVertex)
          a = v;
        else {
          edges.emplace_back(a, v);
          break;
        }
      }
  }
  return Tree(Graph(n, edges));
}

void for_each_labeled_tree(std::size_t n, const std::function<bool(const Tree&)>& visit) {
  if (n == 0) throw std::invalid_argument("a tree needs at least one vertex");
  if (n <= 2) {
    visit(prufer_decode({}, n));
    return;
  }
  std::vector<Vertex> seq(n - 2, 0);
  while (true) {
    if (!visit(prufer_decode(seq, n))) return;
    std::size_t i = seq.size();
    while (i > 0 && seq[i - 1] + 1 == n) seq[--i] = 0;
    if (i == 0) return;
    ++seq[i - 1];
  }
}

std::vector<Tree> all_labeled_trees(std::size_t n) {
  std::vector<Tree> out;
  for_each_labeled_tree(n, [&](const Tree& t) {
    out.push_back(t);
    return true;
  });
  return out;
}

namespace {

bool supports_all(const Graph& g, const Profile& profile, Paradigm p) {
  // An edgeless graph meets every four-point condition vacuously; supports
  // are connected, as the search paradigms assume.
  if (!g.is_connected()) return false;
  return std::all_of(profile.orderings().begin(), profile.orderings().end(),
                     [&](const Ordering& sigma) { return is_s_ordering(g, sigma, p); });
}

void check_cap(std::size_t n, std::size_t cap, const char* what) {
  if (n > cap)
    throw SizeLimitError(std::string(what) + " is capped at " + std::to_string(cap) + " vertices");
}

std::vector<Edge> all_pairs(std::size_t n) {
  std::vector<Edge> pairs;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  return pairs;
}

}  // namespace

std::optional<Tree> brute_force_tree_support(const Profile& profile, Paradigm p, std::size_t cap) {
  check_cap(profile.vertex_count(), cap, "tree enumeration");
  std::optional<Tree> found;
  for_each_labeled_tree(profile.vertex_count(), [&](const Tree& t) {
    if (!supports_all(t.graph(), profile, p)) return true;
    found = t;
    return false;
  });
  return found;
}

std::vector<Tree> all_tree_supports(const Profile& profile, Paradigm p, std::size_t cap) {
  check_cap(profile.vertex_count(), cap, "tree enumeration");
  std::vector<Tree> out;
  for_each_labeled_tree(profile.vertex_count(), [&](const Tree& t) {
    if (supports_all(t.graph(), profile, p)) out.push_back(t);
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<Graph> brute_force_graph_support(const Profile& profile, Paradigm p, ProblemKind problem,
                                               BruteForceCaps caps) {
  if (problem.k < 0) throw std::invalid_argument("bound k must be non-negative");
  const std::size_t n = profile.vertex_count();

  if (problem.kind == ProblemKind::Kind::TreeSupport) {
    auto t = brute_force_tree_support(profile, p, caps.tree);
    if (!t) return std::nullopt;
    return t->graph();
  }

  const std::vector<Edge> pairs = all_pairs(n);

  if (problem.kind == ProblemKind::Kind::EdgeBounded) {
    check_cap(n, caps.edge_bounded, "edge-bounded search");
    const std::size_t top = std::min<std::size_t>(static_cast<std::size_t>(problem.k), pairs.size());
    for (std::size_t size = n == 0 ? 0 : n - 1; size <= top; ++size) {
      std::vector<std::size_t> pick(size);
      for (std::size_t i = 0; i < size; ++i) pick[i] = i;
      while (true) {
        std::vector<Edge> edges;
        for (std::size_t i : pick) edges.push_back(pairs[i]);
        Graph g(n, edges);
        if (supports_all(g, profile, p)) return g;
        // next combination in lexicographic order
        std::size_t i = size;
        while (i > 0 && pick[i - 1] == pairs.size() - size + i - 1) --i;
        if (i == 0) break;
        ++pick[i - 1];
        for (std::size_t j = i; j < size; ++j) pick[j] = pick[j - 1] + 1;
      }
    }
    return std::nullopt;
  }

  check_cap(n, caps.degree_bounded, "degree-bounded search");
  const auto limit = static_cast<std::size_t>(problem.k);
  std::vector<std::size_t> degree(n, 0);
  std::vector<Edge> chosen;
  std::optional<Graph> found;
  std::function<bool(std::size_t)> extend = [&](std::size_t i) -> bool {
    if (i == pairs.size()) {
      Graph g(n, chosen);
      if (!supports_all(g, profile, p)) return false;
      found = std::move(g);
      return true;
    }
    if (extend(i + 1)) return true;
    const Edge e = pairs[i];
    if (degree[e.u] >= limit || degree[e.v] >= limit) return false;
    ++degree[e.u];
    ++degree[e.v];
    chosen.push_back(e);
    bool ok = extend(i + 1);
    chosen.pop_back();
    --degree[e.u];
    --degree[e.v];
    return ok;
  };
  extend(0);
  return found;
}

bool is_vertex_cover(const Graph& g, std::span<const Vertex> cover) {
  std::vector<bool> in(g.vertex_count(), false);
  for (Vertex v : cover) {
    if (v >= g.vertex_count()) throw LookupError("cover vertex outside universe");
    in[v] = true;
  }
  return std::all_of(g.edges().begin(), g.edges().end(), [&](const Edge& e) { return in[e.u] || in[e.v]; });
}

std::vector<Vertex> min_vertex_cover(const Graph& g, std::size_t cap) {
  const std::size_t n = g.vertex_count();
  check_cap(n, cap, "vertex cover search");
  for (std::size_t size = 0; size <= n; ++size) {
    std::vector<Vertex> pick(size);
    for (std::size_t i = 0; i < size; ++i) pick[i] = static_cast<Vertex>(i);
    while (true) {
      if (is_vertex_cover(g, pick)) return pick;
      std::size_t i = size;
      while (i > 0 && pick[i - 1] == n - size + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return {};
}

}  // namespace gsp
