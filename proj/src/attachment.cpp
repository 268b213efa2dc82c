#include "gsp/attachment.hpp"

#include <algorithm>

namespace gsp {

AttachmentDigraph::AttachmentDigraph(std::size_t n, std::vector<Arc> arcs, std::optional<Arc> final_pair_arc)
    : arcs_(std::move(arcs)), out_(n), final_pair_arc_(final_pair_arc) {
  std::sort(arcs_.begin(), arcs_.end());
  arcs_.erase(std::unique(arcs_.begin(), arcs_.end()), arcs_.end());
  for (const Arc& a : arcs_) {
    if (a.from >= n || a.to >= n || a.from == a.to) throw std::invalid_argument("invalid arc");
    out_[a.from].push_back(a.to);
  }
  forced_.resize(n);
  for (std::size_t v = 0; v < n; ++v) forced_[v] = out_[v].size() <= 1;
}

std::vector<Vertex> AttachmentDigraph::forced_vertices() const {
  std::vector<Vertex> out;
  for (std::size_t v = 0; v < out_.size(); ++v)
    if (forced_[v]) out.push_back(static_cast<Vertex>(v));
  return out;
}

std::vector<Vertex> AttachmentDigraph::free_vertices() const {
  std::vector<Vertex> out;
  for (std::size_t v = 0; v < out_.size(); ++v)
    if (!forced_[v]) out.push_back(static_cast<Vertex>(v));
  return out;
}

Graph AttachmentDigraph::underlying() const {
  std::vector<Edge> edges;
  for (const Arc& a : arcs_) edges.emplace_back(a.from, a.to);
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return Graph(vertex_count(), edges);
}

namespace {

// Blocker set with S given as a membership mask.
void blockers_into(const Ordering& sigma, const std::vector<bool>& in_s, Vertex x, std::vector<bool>& out) {
  std::fill(out.begin(), out.end(), false);
  Vertex top = kNoVertex, second = kNoVertex;
  for (Vertex v : sigma) {
    if (!in_s[v]) continue;
    if (top == kNoVertex)
      top = v;
    else {
      second = v;
      break;
    }
  }
  if (x == top) {
    if (second == kNoVertex) throw std::invalid_argument("blocker set of the only vertex of S");
    out[second] = true;
    return;
  }
  for (Vertex v : sigma) {
    if (v == x) return;
    if (in_s[v]) out[v] = true;
  }
}

}  // namespace

std::vector<Vertex> blocker_set(const Ordering& sigma, std::span<const Vertex> s, Vertex x) {
  const std::size_t n = sigma.size();
  std::vector<bool> in_s(n, false);
  for (Vertex v : s) {
    if (v >= n) throw LookupError("vertex outside universe");
    in_s[v] = true;
  }
  if (x >= n || !in_s[x]) throw std::invalid_argument("blocker set: x is not in S");
  std::vector<bool> mask(n);
  blockers_into(sigma, in_s, x, mask);
  std::vector<Vertex> out;
  for (std::size_t v = 0; v < n; ++v)
    if (mask[v]) out.push_back(static_cast<Vertex>(v));
  return out;
}

AttachmentDigraph build_attachment_digraph(const Profile& profile) {
  const std::size_t n = profile.vertex_count();
  std::vector<bool> in_s(n, true);
  std::size_t remaining = n;
  std::vector<Arc> arcs;
  std::vector<bool> common(n), mask(n);

  while (remaining >= 3) {
    std::vector<Vertex> bottom;
    for (const Ordering& sigma : profile.orderings())
      for (auto it = sigma.sequence().rbegin(); it != sigma.sequence().rend(); ++it)
        if (in_s[*it]) {
          bottom.push_back(*it);
          break;
        }
    std::sort(bottom.begin(), bottom.end());
    bottom.erase(std::unique(bottom.begin(), bottom.end()), bottom.end());

    for (Vertex v : bottom) {
      std::fill(common.begin(), common.end(), true);
      for (const Ordering& sigma : profile.orderings()) {
        blockers_into(sigma, in_s, v, mask);
        for (std::size_t u = 0; u < n; ++u) common[u] = common[u] && mask[u];
      }
      for (std::size_t u = 0; u < n; ++u)
        if (common[u]) arcs.push_back(Arc{v, static_cast<Vertex>(u)});
    }
    for (Vertex v : bottom) in_s[v] = false;
    remaining -= bottom.size();
  }

  std::optional<Arc> last;
  if (remaining == 2) {
    std::vector<Vertex> pair;
    for (std::size_t v = 0; v < n; ++v)
      if (in_s[v]) pair.push_back(static_cast<Vertex>(v));
    last = Arc{pair[0], pair[1]};
    arcs.push_back(*last);
  }
  return AttachmentDigraph(n, std::move(arcs), last);
}

std::optional<Tree> forced_subtree(const AttachmentDigraph& d) {
  auto members = d.forced_vertices();
  if (members.empty()) return std::nullopt;
  std::vector<Edge> edges;
  for (const Arc& a : d.arcs())
    if (d.is_forced(a.from) && d.is_forced(a.to)) edges.emplace_back(a.from, a.to);
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  try {
    return Tree(d.vertex_count(), std::move(members), edges);
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
}

bool attachment_admits_tree(const AttachmentDigraph& d) {
  // A vertex peeled off while three or more remain needs a neighbour among the
  // survivors; an empty common blocker set rules every tree out even when arcs
  // from other vertices keep the graph connected. Exactly one vertex, the last
  // survivor, goes without an out-arc.
  std::size_t sinks = 0;
  for (std::size_t v = 0; v < d.vertex_count(); ++v) sinks += d.out_degree(static_cast<Vertex>(v)) == 0;
  return sinks == 1 && d.underlying().is_connected();
}

GsTreeOutcome recognize_gs_tree(const Profile& profile) {
  AttachmentDigraph d = build_attachment_digraph(profile);
  if (!attachment_admits_tree(d)) return {};
  std::vector<Edge> edges;
  for (std::size_t v = 0; v < d.vertex_count(); ++v)
    if (d.out_degree(static_cast<Vertex>(v)) > 0)
      edges.emplace_back(static_cast<Vertex>(v), d.out_neighbors(static_cast<Vertex>(v)).front());
  try {
    return GsTreeOutcome{true, Tree(Graph(d.vertex_count(), edges))};
  } catch (const std::invalid_argument& e) {
    throw InternalError(std::string("attachment witness is not a tree: ") + e.what());
  }
}

std::vector<Tree> enumerate_gs_tree_supports(const Profile& profile, std::size_t free_cap) {
  AttachmentDigraph d = build_attachment_digraph(profile);
  if (!attachment_admits_tree(d)) return {};
  if (d.free_vertices().size() > free_cap)
    throw SizeLimitError("more than " + std::to_string(free_cap) + " free vertices");

  std::vector<Vertex> sources;
  for (std::size_t v = 0; v < d.vertex_count(); ++v)
    if (d.out_degree(static_cast<Vertex>(v)) > 0) sources.push_back(static_cast<Vertex>(v));

  std::vector<Tree> out;
  std::vector<std::size_t> choice(sources.size(), 0);
  while (true) {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < sources.size(); ++i)
      edges.emplace_back(sources[i], d.out_neighbors(sources[i])[choice[i]]);
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) == edges.end()) {
      Graph g(d.vertex_count(), edges);
      if (g.edge_count() + 1 == g.vertex_count() && g.is_connected()) out.emplace_back(std::move(g));
    }
    std::size_t i = 0;
    while (i < sources.size() && ++choice[i] == d.out_degree(sources[i])) choice[i++] = 0;
    if (i == sources.size()) break;
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace gsp
