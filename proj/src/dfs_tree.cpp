#include "gsp/dfs_tree.hpp"

#include <algorithm>
#include <climits>
#include <iostream>

#include "gsp/verifiers.hpp"

namespace gsp {

std::string_view reason_code(NoReason r) {
  switch (r) {
    case NoReason::DisconnectedAttachment: return "DISCONNECTED_ATTACHMENT";
    case NoReason::ForcedNotTree: return "FORCED_NOT_TREE";
    case NoReason::TstarNotSupportFull: return "TSTAR_NOT_SUPPORT_FULL";
    case NoReason::RestrictionFails: return "RESTRICTION_FAILS";
    case NoReason::EmptyQ: return "EMPTY_Q";
    case NoReason::FinalVerifyFailed: return "FINAL_VERIFY_FAILED";
  }
  return "?";
}

Vertex guider(const Ordering& sigma, Vertex v, const std::vector<bool>& forced) {
  for (std::size_t r = sigma.rank(v); r-- > 0;)
    if (forced[sigma[r]]) return sigma[r];
  throw InternalError("no forced vertex precedes vertex " + std::to_string(v));
}

namespace {

std::vector<Vertex> q_path_rooted(const Ordering& sigma, Vertex v, const Tree& tstar, const std::vector<bool>& forced,
                                  const std::vector<Vertex>& parent) {
  const Vertex u = guider(sigma, v, forced);
  Vertex w = sigma[0];
  for (std::size_t r = sigma.rank(v) + 1; r < sigma.size(); ++r)
    if (forced[sigma[r]]) {
      w = parent[sigma[r]];
      if (w == kNoVertex) throw InternalError("forced successor has no parent in the forced tree");
      break;
    }
  auto path = tstar.path(u, w);
  std::sort(path.begin(), path.end());
  return path;
}

std::vector<Vertex> intersect(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
  std::vector<Vertex> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

std::vector<Vertex> q_path(const Ordering& sigma, Vertex v, const Tree& tstar, const std::vector<bool>& forced) {
  return q_path_rooted(sigma, v, tstar, forced, tstar.parents(sigma[0]));
}

QMap purify(QMap q, const Profile& profile, const Tree& tstar, const std::vector<bool>& forced, PurifyStats* stats) {
  std::map<Vertex, std::vector<int>> dist;
  auto dist_from = [&](Vertex w) -> const std::vector<int>& {
    auto it = dist.find(w);
    if (it == dist.end()) it = dist.emplace(w, tstar.distances(w)).first;
    return it->second;
  };
  auto set_of = [&](Vertex v) -> std::vector<Vertex>& {
    auto it = q.find(v);
    if (it == q.end()) throw std::invalid_argument("purify: free vertex " + std::to_string(v) + " has no Q set");
    return it->second;
  };

  PurifyStats local;
  bool changed = true;
  while (changed) {
    changed = false;
    ++local.sweeps;
    for (const Ordering& sigma : profile.orderings()) {
      // Free vertices between two consecutive forced vertices share the earlier one as guider.
      Vertex w = kNoVertex;
      std::vector<Vertex> run;
      auto flush = [&] {
        for (std::size_t i = 0; i < run.size(); ++i)
          for (std::size_t j = i + 1; j < run.size(); ++j) {
            std::vector<Vertex>& qu = set_of(run[i]);
            std::vector<Vertex>& qv = set_of(run[j]);
            const std::vector<int>& d = dist_from(w);
            int min_u = INT_MAX, max_v = INT_MIN;
            for (Vertex x : qu) min_u = std::min(min_u, d[x]);
            for (Vertex x : qv) max_v = std::max(max_v, d[x]);
            std::vector<Vertex> nv, nu;
            for (Vertex x : qv)
              if (d[x] >= min_u) nv.push_back(x);
            for (Vertex x : qu)
              if (d[x] <= max_v) nu.push_back(x);
            if (nv.size() != qv.size() || nu.size() != qu.size()) {
              qv = std::move(nv);
              qu = std::move(nu);
              changed = true;
              ++local.effective_applications;
            }
          }
        run.clear();
      };
      for (Vertex x : sigma) {
        if (forced[x]) {
          flush();
          w = x;
        } else {
          if (w == kNoVertex) throw InternalError("free vertex ahead of every forced vertex");
          run.push_back(x);
        }
      }
      flush();
    }
  }
  if (stats) *stats = local;
  return q;
}

bool is_subpath(const Tree& t, std::span<const Vertex> set) {
  if (set.empty()) return false;
  std::vector<Vertex> keep(set.begin(), set.end());
  for (Vertex v : keep)
    if (!t.contains(v)) return false;
  Graph sub = t.graph().induced(keep);
  if (sub.edge_count() + 1 != sub.vertex_count() || !sub.is_connected()) return false;
  return sub.max_degree() <= 2;
}

Tree assign_parents(const Tree& tstar, const QMap& q, std::span<const std::size_t> rank) {
  std::vector<Edge> edges = tstar.edges();
  std::vector<Vertex> members = tstar.members();
  for (const auto& [v, set] : q) {
    if (set.empty()) throw std::invalid_argument("assign_parents: empty Q set");
    Vertex best = set.front();
    if (!rank.empty())
      for (Vertex x : set)
        if (rank[x] < rank[best]) best = x;
    edges.emplace_back(v, best);
    members.push_back(v);
  }
  return Tree(tstar.universe_size(), std::move(members), edges);
}

RecognitionOutcome recognize_dfs_tree(const Profile& profile) {
  auto no = [](NoReason r) { return RecognitionOutcome{false, std::nullopt, r}; };
  const AttachmentDigraph d = build_attachment_digraph(profile);
  if (!d.underlying().is_connected()) return no(NoReason::DisconnectedAttachment);

  const std::optional<Tree> tstar = forced_subtree(d);
  if (!tstar) return no(NoReason::ForcedNotTree);
  const std::vector<bool>& forced = d.forced_mask();

  if (tstar->is_spanning()) {
    for (const Ordering& sigma : profile.orderings())
      if (!satisfies_property(tstar->graph(), sigma, FourPointProperty::D)) return no(NoReason::TstarNotSupportFull);
    return RecognitionOutcome{true, *tstar, std::nullopt};
  }

  // Each ordering restricted to the forced vertices must be a DFS ordering of tstar.
  const std::vector<Vertex>& kept = tstar->members();
  const Graph local = tstar->graph().induced(kept);
  std::vector<Vertex> local_id(profile.vertex_count(), kNoVertex);
  for (std::size_t i = 0; i < kept.size(); ++i) local_id[kept[i]] = static_cast<Vertex>(i);
  for (const Ordering& sigma : profile.orderings()) {
    Sequence restricted;
    for (Vertex v : sigma)
      if (forced[v]) restricted.push_back(local_id[v]);
    if (!satisfies_property(local, Ordering(std::move(restricted)), FourPointProperty::D))
      return no(NoReason::RestrictionFails);
  }

  QMap q;
  for (std::size_t i = 0; i < profile.size(); ++i) {
    const Ordering& sigma = profile[i];
    const auto parent = tstar->parents(sigma[0]);
    for (Vertex v : d.free_vertices()) {
      auto path = q_path_rooted(sigma, v, *tstar, forced, parent);
      auto it = q.find(v);
      if (it == q.end())
        q.emplace(v, std::move(path));
      else
        it->second = intersect(it->second, path);
    }
  }

  q = purify(std::move(q), profile, *tstar, forced);
  for (const auto& [v, set] : q)
    if (set.empty()) return no(NoReason::EmptyQ);

  Tree witness = assign_parents(*tstar, q);
  for (const Ordering& sigma : profile.orderings())
    if (!satisfies_property(witness.graph(), sigma, FourPointProperty::D)) {
      std::clog << "recognize_dfs_tree: constructed tree fails verification\n";
      return no(NoReason::FinalVerifyFailed);
    }
  return RecognitionOutcome{true, std::move(witness), std::nullopt};
}

}  // namespace gsp
