#include "gsp/reductions.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <exception>
#include <initializer_list>
#include <ostream>
#include <thread>

#include "gsp/verifiers.hpp"

namespace gsp {

std::string_view to_string(Bound b) { return b == Bound::Edge ? "edge" : "degree"; }

std::optional<Bound> parse_bound(std::string_view s) {
  if (s == "edge") return Bound::Edge;
  if (s == "deg" || s == "degree") return Bound::Degree;
  return std::nullopt;
}

namespace {

using Pair = std::pair<std::size_t, std::size_t>;

class Builder {
 public:
  Vertex add(std::string name) {
    names_.push_back(std::move(name));
    return static_cast<Vertex>(names_.size() - 1);
  }
  void connect(Vertex a, Vertex b) { edges_.emplace_back(a, b); }
  void clique(std::span<const Vertex> vs) {
    for (std::size_t i = 0; i < vs.size(); ++i)
      for (std::size_t j = i + 1; j < vs.size(); ++j) connect(vs[i], vs[j]);
  }
  Universe universe() const {
    try {
      return Universe(names_);
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument(std::string("source vertex names clash with generated names: ") + e.what());
    }
  }
  Graph graph() const { return Graph(names_.size(), edges_); }

 private:
  std::vector<std::string> names_;
  std::vector<Edge> edges_;
};

struct Source {
  std::size_t n = 0, m = 0;
  std::vector<Pair> edges;                       // i < j, canonical order
  std::vector<std::vector<std::size_t>> incident;  // edge ids at each vertex, ascending
};

Source check_source(const NamedGraph& g, std::size_t kappa) {
  Source s;
  s.n = g.graph.vertex_count();
  s.m = g.graph.edge_count();
  if (s.n < 4) throw std::invalid_argument("source graph needs at least 4 vertices");
  for (Vertex v = 0; v < s.n; ++v)
    if (g.graph.degree(v) != 3) throw std::invalid_argument("source graph must be 3-regular");
  if (kappa < 2) throw std::invalid_argument("kappa must be at least 2");
  s.incident.resize(s.n);
  for (const Edge& e : g.graph.edges()) {
    s.incident[e.u].push_back(s.edges.size());
    s.incident[e.v].push_back(s.edges.size());
    s.edges.emplace_back(e.u, e.v);
  }
  return s;
}

std::vector<Pair> pairs_of(std::size_t n) {
  std::vector<Pair> out;
  out.reserve(n * (n > 0 ? n - 1 : 0) / 2);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) out.emplace_back(i, j);
  return out;
}

std::string num(std::size_t x) { return std::to_string(x); }

void push_all(Sequence& out, std::span<const Vertex> xs) { out.insert(out.end(), xs.begin(), xs.end()); }

void push_except(Sequence& out, std::span<const Vertex> xs, std::initializer_list<Vertex> skip) {
  for (Vertex x : xs)
    if (std::find(skip.begin(), skip.end(), x) == skip.end()) out.push_back(x);
}

std::string construction_name(Paradigm p, Bound b) {
  std::string s(to_string(p));
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  return s + "-" + std::string(to_string(b));
}

std::vector<Vertex> add_source_vertices(Builder& bld, const NamedGraph& g) {
  std::vector<Vertex> v;
  for (Vertex i = 0; i < g.graph.vertex_count(); ++i) v.push_back(bld.add(g.universe.name(i)));
  bld.clique(v);
  return v;
}

// ---- BFS and LexBFS ----
//
// V a clique, n^2 pendants F_i on each v_i, an isolated hub z (with n(n+1)
// pendants in the degree variant). Four orderings per edge v_i v_j and pair
// p < q of pendant indices; t is the lowest index outside {i, j}.

struct BfsLayout {
  std::size_t n = 0;
  Sequence v;
  std::vector<Sequence> f;
  Vertex z = 0;
  Sequence zs;
  std::vector<Pair> edges;
  std::vector<std::size_t> t;
  std::vector<Pair> f_pairs, z_pairs;
};

void bfs_pi(const BfsLayout& L, std::size_t a, std::size_t b, std::size_t t, std::size_t p, std::size_t q,
            Sequence& out) {
  const Sequence& fa = L.f[a];
  out.push_back(fa[p]);
  out.push_back(L.v[a]);
  push_except(out, fa, {fa[p], fa[q]});
  out.push_back(fa[q]);
  out.push_back(L.v[b]);
  push_except(out, L.v, {L.v[a], L.v[b], L.v[t]});
  out.push_back(L.v[t]);
  out.push_back(L.z);
  push_all(out, L.f[b]);
  for (std::size_t c = 0; c < L.n; ++c)
    if (c != a && c != b && c != t) push_all(out, L.f[c]);
  push_all(out, L.f[t]);
}

ReductionInstance reduce_bfs(Paradigm p, Bound bound, const NamedGraph& g, std::size_t kappa, const Source& s) {
  auto L = std::make_shared<BfsLayout>();
  const std::size_t n = s.n;
  Builder bld;
  L->n = n;
  L->v = add_source_vertices(bld, g);
  L->f.resize(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n * n; ++j) {
      L->f[i].push_back(bld.add("f" + num(i + 1) + "." + num(j + 1)));
      bld.connect(L->f[i].back(), L->v[i]);
    }
  L->z = bld.add("z");
  if (bound == Bound::Degree)
    for (std::size_t l = 0; l < n * (n + 1); ++l) {
      L->zs.push_back(bld.add("z." + num(l + 1)));
      bld.connect(L->z, L->zs.back());
    }
  L->edges = s.edges;
  for (auto [i, j] : s.edges) {
    std::size_t t = 0;
    while (t == i || t == j) ++t;
    L->t.push_back(t);
  }
  L->f_pairs = pairs_of(n * n);
  L->z_pairs = pairs_of(n * (n + 1));

  std::vector<ReductionInstance::Group> groups;
  long long k = 0;
  const std::size_t P = L->f_pairs.size();
  if (bound == Bound::Edge) {
    k = static_cast<long long>(kappa + n * (n - 1) / 2 + n * n * n);
    groups.push_back({"edge-endpoint-pendants", s.m * P * 4, [L, P](std::size_t idx, Sequence& out) {
                        const std::size_t e = idx / (4 * P), pi = (idx / 4) % P, var = idx % 4;
                        auto [i, j] = L->edges[e];
                        auto [p, q] = L->f_pairs[pi];
                        if (var & 2) std::swap(i, j);
                        if (var & 1) std::swap(p, q);
                        bfs_pi(*L, i, j, L->t[e], p, q, out);
                      }});
  } else {
    k = static_cast<long long>(kappa + n * (n + 1));
    const std::size_t Q = L->z_pairs.size();
    groups.push_back({"edge-endpoint-pendants-hub-pendants", s.m * P * Q * 8,
                      [L, P, Q](std::size_t idx, Sequence& out) {
                        const std::size_t var = idx % 8;
                        const std::size_t zi = (idx / 8) % Q;
                        const std::size_t pi = (idx / (8 * Q)) % P;
                        const std::size_t e = idx / (8 * Q * P);
                        auto [i, j] = L->edges[e];
                        auto [p, q] = L->f_pairs[pi];
                        auto [l, r] = L->z_pairs[zi];
                        if (var & 4) std::swap(i, j);
                        if (var & 2) std::swap(p, q);
                        if (var & 1) std::swap(l, r);
                        bfs_pi(*L, i, j, L->t[e], p, q, out);
                        out.push_back(L->zs[l]);
                        push_except(out, L->zs, {L->zs[l], L->zs[r]});
                        out.push_back(L->zs[r]);
                      }});
  }
  return ReductionInstance(p, bound, g, kappa, construction_name(p, bound), bld.universe(), bld.graph(), L->z, L->v, k,
                           L->zs, std::move(groups));
}

// ---- DFS ----
//
// V a clique, one pendant f_i per v_i, an isolated hub z (with n pendants in
// the degree variant). VF lists v_1 f_1 ... v_n f_n.

struct DfsLayout {
  std::size_t n = 0;
  Sequence v, f;
  Vertex z = 0;
  Sequence zs;
  std::vector<Pair> pairs, edges;
};

void push_vf_except(const DfsLayout& L, Sequence& out, std::size_t a, std::size_t b) {
  for (std::size_t c = 0; c < L.n; ++c)
    if (c != a && c != b) {
      out.push_back(L.v[c]);
      out.push_back(L.f[c]);
    }
}

ReductionInstance reduce_dfs(Paradigm p, Bound bound, const NamedGraph& g, std::size_t kappa, const Source& s) {
  auto L = std::make_shared<DfsLayout>();
  const std::size_t n = s.n;
  Builder bld;
  L->n = n;
  L->v = add_source_vertices(bld, g);
  for (std::size_t i = 0; i < n; ++i) {
    L->f.push_back(bld.add("f" + num(i + 1)));
    bld.connect(L->f[i], L->v[i]);
  }
  L->z = bld.add("z");
  const bool deg = bound == Bound::Degree;
  if (deg)
    for (std::size_t t = 0; t < n; ++t) {
      L->zs.push_back(bld.add("z." + num(t + 1)));
      bld.connect(L->z, L->zs.back());
    }
  L->pairs = pairs_of(n);
  L->edges = s.edges;

  std::vector<ReductionInstance::Group> groups;
  groups.push_back({"vertex-pairs", L->pairs.size(), [L, deg](std::size_t idx, Sequence& out) {
                      auto [i, j] = L->pairs[idx];
                      out.push_back(L->v[i]);
                      out.push_back(L->v[j]);
                      out.push_back(L->f[j]);
                      push_vf_except(*L, out, i, j);
                      out.push_back(L->z);
                      if (deg) push_all(out, L->zs);
                      out.push_back(L->f[i]);
                    }});
  groups.push_back({"pendant-first", deg ? n * n : n, [L, deg](std::size_t idx, Sequence& out) {
                      const std::size_t i = deg ? idx / L->n : idx;
                      out.push_back(L->f[i]);
                      out.push_back(L->v[i]);
                      push_vf_except(*L, out, i, i);
                      out.push_back(L->z);
                      if (deg) {
                        const Vertex zt = L->zs[idx % L->n];
                        out.push_back(zt);
                        push_except(out, L->zs, {zt});
                      }
                    }});
  groups.push_back({"edges", 2 * s.m, [L, deg](std::size_t idx, Sequence& out) {
                      auto [i, j] = L->edges[idx / 2];
                      if (idx % 2) std::swap(i, j);
                      push_vf_except(*L, out, i, j);
                      out.push_back(L->v[i]);
                      out.push_back(L->v[j]);
                      out.push_back(L->f[j]);
                      out.push_back(L->z);
                      if (deg) push_all(out, L->zs);
                      out.push_back(L->f[i]);
                    }});
  const long long k = deg ? static_cast<long long>(kappa + n) : static_cast<long long>(kappa + n * (n - 1) / 2 + n);
  return ReductionInstance(p, bound, g, kappa, construction_name(p, bound), bld.universe(), bld.graph(), L->z, L->v, k,
                           L->zs, std::move(groups));
}

// ---- LexDFS ----
//
// Per edge e_p = v_i v_j (i < j): t_p adjacent to v_i and v_j, w_p adjacent to
// t_p and v_i, u_p adjacent to t_p and all of V. V is a clique and the hub z
// is adjacent to every t_p. Each ordering is a fixed prefix completed by a
// LexDFS of the base graph.

struct LexDfsLayout {
  std::size_t n = 0;
  Sequence v, t, w, u;
  Vertex z = 0;
  std::vector<Pair> pairs, edges;
  std::vector<std::size_t> pair_partner, edge_partner;  // disjoint edge, lowest index
  Graph base;
};

ReductionInstance reduce_lexdfs(Paradigm p, Bound bound, const NamedGraph& g, std::size_t kappa, const Source& s) {
  const std::size_t n = s.n, m = s.m;
  if (n < 10) throw std::invalid_argument("the LexDFS construction needs at least 10 source vertices");
  if (kappa < 3 || kappa > n - 1) throw std::invalid_argument("the LexDFS construction needs 3 <= kappa <= n-1");
  auto L = std::make_shared<LexDfsLayout>();
  Builder bld;
  L->n = n;
  L->v = add_source_vertices(bld, g);
  for (std::size_t e = 0; e < m; ++e) L->t.push_back(bld.add("t" + num(e + 1)));
  for (std::size_t e = 0; e < m; ++e) L->w.push_back(bld.add("w" + num(e + 1)));
  for (std::size_t e = 0; e < m; ++e) L->u.push_back(bld.add("u" + num(e + 1)));
  L->z = bld.add("z");
  L->edges = s.edges;
  for (std::size_t e = 0; e < m; ++e) {
    auto [i, j] = s.edges[e];
    bld.connect(L->t[e], L->v[i]);
    bld.connect(L->t[e], L->v[j]);
    bld.connect(L->w[e], L->t[e]);
    bld.connect(L->w[e], L->v[i]);
    bld.connect(L->u[e], L->t[e]);
    for (Vertex x : L->v) bld.connect(L->u[e], x);
    bld.connect(L->z, L->t[e]);
  }
  auto disjoint = [&](std::size_t a, std::size_t b) {
    for (std::size_t e = 0; e < m; ++e) {
      auto [x, y] = s.edges[e];
      if (x != a && x != b && y != a && y != b) return e;
    }
    throw std::invalid_argument("source graph has no edge avoiding a vertex pair");
  };
  L->pairs = pairs_of(n);
  for (auto [i, j] : L->pairs) L->pair_partner.push_back(disjoint(i, j));
  for (auto [i, j] : s.edges) L->edge_partner.push_back(disjoint(i, j));
  L->base = bld.graph();

  auto complete = [L](Sequence& out) {
    Ordering full = complete_prefix(L->base, out, Paradigm::LexDFS);
    out = full.sequence();
  };
  // V minus {i, j, x, y}, then v_x v_y u_q t_q z
  auto tail = [L](Sequence& out, std::size_t i, std::size_t j, std::size_t q) {
    auto [x, y] = L->edges[q];
    push_except(out, L->v, {L->v[i], L->v[j], L->v[x], L->v[y]});
    out.push_back(L->v[x]);
    out.push_back(L->v[y]);
    out.push_back(L->u[q]);
    out.push_back(L->t[q]);
    out.push_back(L->z);
  };

  std::vector<ReductionInstance::Group> groups;
  groups.push_back({"vertex-pairs", L->pairs.size(), [L, tail, complete](std::size_t idx, Sequence& out) {
                      auto [i, j] = L->pairs[idx];
                      out.push_back(L->v[i]);
                      out.push_back(L->v[j]);
                      tail(out, i, j, L->pair_partner[idx]);
                      complete(out);
                    }});
  groups.push_back({"edge-gadgets", 3 * m, [L, tail, complete](std::size_t idx, Sequence& out) {
                      const std::size_t e = idx / 3, var = idx % 3;
                      auto [i, j] = L->edges[e];
                      out.push_back(L->t[e]);
                      if (var == 0) {
                        out.insert(out.end(), {L->v[i], L->u[e], L->v[j]});
                      } else if (var == 1) {
                        out.insert(out.end(), {L->v[j], L->u[e], L->v[i]});
                      } else {
                        out.insert(out.end(), {L->v[i], L->w[e], L->v[j], L->u[e]});
                      }
                      tail(out, i, j, L->edge_partner[e]);
                      complete(out);
                    }});
  groups.push_back({"edges-last", m, [L, complete](std::size_t e, Sequence& out) {
                      auto [i, j] = L->edges[e];
                      push_except(out, L->v, {L->v[i], L->v[j]});
                      out.insert(out.end(), {L->v[i], L->v[j], L->u[e], L->t[e], L->z});
                      complete(out);
                    }});
  groups.push_back({"edges-first", m * (n - 2), [L, complete](std::size_t idx, Sequence& out) {
                      const std::size_t e = idx / (L->n - 2);
                      auto [i, j] = L->edges[e];
                      std::size_t h = idx % (L->n - 2);
                      if (h >= i) ++h;
                      if (h >= j) ++h;
                      out.push_back(L->v[i]);
                      out.push_back(L->v[j]);
                      push_except(out, L->v, {L->v[i], L->v[j], L->v[h]});
                      out.insert(out.end(), {L->v[h], L->u[e], L->t[e], L->z});
                      complete(out);
                    }});
  const long long k = bound == Bound::Edge ? static_cast<long long>(kappa + L->base.edge_count())
                                           : static_cast<long long>(m + kappa);
  return ReductionInstance(p, bound, g, kappa, construction_name(p, bound), bld.universe(), L->base, L->z, L->v, k, {},
                           std::move(groups));
}

// ---- MCS ----
//
// Per edge e_x two vertices w_x, w_{m+x} adjacent to both endpoints. F_i holds
// n-i+1 pendants of v_i. U is a clique of 4n vertices joined to all of W and F;
// its last vertex is the hub z.

struct McsLayout {
  std::size_t n = 0, m = 0;
  Sequence v, w, fall, u;  // u.back() is z
  std::vector<Sequence> f;
  std::vector<std::size_t> f_owner;  // index into fall -> i
  Vertex z = 0;
  std::vector<Pair> pairs, u_pairs, edges;
  std::vector<std::vector<bool>> w_at;  // w_at[i][vertex]: w adjacent to v_i
  std::size_t universe = 0;
};

ReductionInstance reduce_mcs(Paradigm p, Bound bound, const NamedGraph& g, std::size_t kappa, const Source& s) {
  const std::size_t n = s.n, m = s.m;
  auto L = std::make_shared<McsLayout>();
  Builder bld;
  L->n = n;
  L->m = m;
  L->v = add_source_vertices(bld, g);
  for (std::size_t x = 0; x < 2 * m; ++x) L->w.push_back(bld.add("w" + num(x + 1)));
  L->f.resize(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t q = 0; q < n - i; ++q) {
      L->f[i].push_back(bld.add("f" + num(i + 1) + "." + num(q + 1)));
      L->fall.push_back(L->f[i].back());
      L->f_owner.push_back(i);
      bld.connect(L->f[i].back(), L->v[i]);
    }
  for (std::size_t x = 0; x + 1 < 4 * n; ++x) L->u.push_back(bld.add("u" + num(x + 1)));
  L->z = bld.add("z");
  L->u.push_back(L->z);
  L->edges = s.edges;
  for (std::size_t x = 0; x < m; ++x) {
    auto [i, j] = s.edges[x];
    for (Vertex wx : {L->w[x], L->w[m + x]}) {
      bld.connect(wx, L->v[i]);
      bld.connect(wx, L->v[j]);
    }
  }
  bld.clique(L->u);
  for (Vertex ux : L->u) {
    for (Vertex wx : L->w) bld.connect(ux, wx);
    for (Vertex fx : L->fall) bld.connect(ux, fx);
  }
  Universe universe = bld.universe();
  Graph base = bld.graph();
  L->universe = universe.size();
  L->w_at.assign(n, std::vector<bool>(L->universe, false));
  for (std::size_t x = 0; x < m; ++x) {
    auto [i, j] = s.edges[x];
    for (std::size_t y : {i, j}) L->w_at[y][L->w[x]] = L->w_at[y][L->w[m + x]] = true;
  }
  L->pairs = pairs_of(n);
  L->u_pairs = pairs_of(4 * n);

  std::vector<ReductionInstance::Group> groups;
  groups.push_back({"vertex-pairs", L->pairs.size(), [L](std::size_t idx, Sequence& out) {
                      auto [i, j] = L->pairs[idx];
                      out.push_back(L->v[i]);
                      out.push_back(L->v[j]);
                      push_except(out, L->v, {L->v[i], L->v[j]});
                      out.insert(out.end(), {L->z, L->w[0], L->w[L->m]});
                      push_except(out, L->u, {L->z});
                      push_except(out, L->w, {L->w[0], L->w[L->m]});
                      push_all(out, L->fall);
                    }});
  groups.push_back({"hub-clique-pairs", L->u_pairs.size(), [L](std::size_t idx, Sequence& out) {
                      auto [i, j] = L->u_pairs[idx];
                      out.push_back(L->u[i]);
                      out.push_back(L->u[j]);
                      push_except(out, L->u, {L->u[i], L->u[j]});
                      push_all(out, L->w);
                      push_all(out, L->fall);
                      push_all(out, L->v);
                    }});
  groups.push_back({"w-first", 2 * m * 4 * n, [L](std::size_t idx, Sequence& out) {
                      const Vertex wi = L->w[idx / (4 * L->n)], uj = L->u[idx % (4 * L->n)];
                      out.push_back(wi);
                      out.push_back(uj);
                      push_except(out, L->u, {uj});
                      push_except(out, L->w, {wi});
                      push_all(out, L->fall);
                      push_all(out, L->v);
                    }});
  groups.push_back({"pendant-first", L->fall.size() * 4 * n, [L](std::size_t idx, Sequence& out) {
                      const Vertex fp = L->fall[idx / (4 * L->n)], ux = L->u[idx % (4 * L->n)];
                      out.push_back(fp);
                      out.push_back(ux);
                      push_except(out, L->u, {ux});
                      push_except(out, L->fall, {fp});
                      push_all(out, L->w);
                      push_all(out, L->v);
                    }});
  groups.push_back({"vertex-pendant", L->fall.size(), [L](std::size_t idx, Sequence& out) {
                      const Vertex fp = L->fall[idx];
                      const std::size_t i = L->f_owner[idx];
                      const auto& wi = L->w_at[i];
                      out.push_back(L->v[i]);
                      out.push_back(fp);
                      out.push_back(L->z);
                      push_except(out, L->u, {L->z});
                      for (Vertex x : L->w)
                        if (wi[x]) out.push_back(x);
                      for (Vertex x : L->w)
                        if (!wi[x]) out.push_back(x);
                      push_except(out, L->f[i], {fp});
                      for (std::size_t c = 0; c < L->n; ++c)
                        if (c != i) push_all(out, L->f[c]);
                      push_except(out, L->v, {L->v[i]});
                    }});
  groups.push_back({"edge-w-pairs", 4 * m, [L](std::size_t idx, Sequence& out) {
                      const std::size_t x = idx / 4, var = idx % 4;
                      auto [i, j] = L->edges[x];
                      Vertex first = L->w[x], last = L->w[L->m + x];
                      if (var & 1) std::swap(first, last);
                      const std::size_t a = (var & 2) ? j : i, b = (var & 2) ? i : j;
                      out.insert(out.end(), {first, L->v[a], L->v[b], L->z, last});
                      push_except(out, L->u, {L->z});
                      std::vector<bool> drop(L->universe, false);
                      drop[first] = drop[last] = true;
                      for (Vertex y : L->w)
                        if ((L->w_at[i][y] || L->w_at[j][y]) && !drop[y]) out.push_back(y);
                      for (Vertex y : L->w)
                        if (!L->w_at[i][y] && !L->w_at[j][y]) out.push_back(y);
                      push_all(out, L->f[i]);
                      push_all(out, L->f[j]);
                      for (std::size_t c = 0; c < L->n; ++c)
                        if (c != i && c != j) push_all(out, L->f[c]);
                      push_except(out, L->v, {L->v[i], L->v[j]});
                    }});
  const long long k = bound == Bound::Edge
                          ? static_cast<long long>(kappa + base.edge_count())
                          : static_cast<long long>(2 * m + 4 * n - 1 + n * (n + 1) / 2 + kappa);
  return ReductionInstance(p, bound, g, kappa, construction_name(p, bound), std::move(universe), std::move(base), L->z,
                           L->v, k, {}, std::move(groups));
}

// ---- MNS ----
//
// Per edge e_x = v_i v_j: t_x, w_x, w_{m+x} with edges v_i w_x, w_x t_x,
// t_x w_{m+x}, w_{m+x} v_j, v_j t_x, t_x v_i. V is a clique, f_i a pendant of
// v_i. U is a clique of 3n vertices joined to all of T; all but the hub z (the
// last vertex of U) are also joined to F. The degree variant hangs n pendants
// on z and appends them to every ordering.

struct MnsLayout {
  std::size_t n = 0, m = 0;
  Sequence v, t, w, f, u, zs;
  Vertex z = 0;
  std::vector<Pair> pairs, u_pairs, edges;
  std::vector<std::vector<std::size_t>> incident;
  bool deg = false;
};

ReductionInstance reduce_mns(Paradigm p, Bound bound, const NamedGraph& g, std::size_t kappa, const Source& s) {
  const std::size_t n = s.n, m = s.m;
  auto L = std::make_shared<MnsLayout>();
  Builder bld;
  L->n = n;
  L->m = m;
  L->deg = bound == Bound::Degree;
  L->v = add_source_vertices(bld, g);
  for (std::size_t x = 0; x < m; ++x) L->t.push_back(bld.add("t" + num(x + 1)));
  for (std::size_t x = 0; x < 2 * m; ++x) L->w.push_back(bld.add("w" + num(x + 1)));
  for (std::size_t i = 0; i < n; ++i) {
    L->f.push_back(bld.add("f" + num(i + 1)));
    bld.connect(L->f[i], L->v[i]);
  }
  for (std::size_t x = 0; x + 1 < 3 * n; ++x) L->u.push_back(bld.add("u" + num(x + 1)));
  L->z = bld.add("z");
  L->u.push_back(L->z);
  if (L->deg)
    for (std::size_t i = 0; i < n; ++i) {
      L->zs.push_back(bld.add("z." + num(i + 1)));
      bld.connect(L->z, L->zs.back());
    }
  L->edges = s.edges;
  L->incident = s.incident;
  for (std::size_t x = 0; x < m; ++x) {
    auto [i, j] = s.edges[x];
    bld.connect(L->v[i], L->w[x]);
    bld.connect(L->w[x], L->t[x]);
    bld.connect(L->t[x], L->w[m + x]);
    bld.connect(L->w[m + x], L->v[j]);
    bld.connect(L->v[j], L->t[x]);
    bld.connect(L->t[x], L->v[i]);
  }
  bld.clique(L->u);
  for (Vertex ux : L->u) {
    for (Vertex tx : L->t) bld.connect(ux, tx);
    if (ux != L->z)
      for (Vertex fx : L->f) bld.connect(ux, fx);
  }
  L->pairs = pairs_of(n);
  L->u_pairs = pairs_of(3 * n);

  // T(i) and T(i, j) in T order, and the rest of T.
  auto push_t_split = [L](Sequence& out, std::size_t i, std::size_t j, std::optional<Vertex> skip, bool inside) {
    for (std::size_t x = 0; x < L->m; ++x) {
      auto [a, b] = L->edges[x];
      const bool in = a == i || b == i || a == j || b == j;
      if (in == inside && (!skip || L->t[x] != *skip)) out.push_back(L->t[x]);
    }
  };
  auto finish = [L](Sequence& out) {
    if (L->deg) push_all(out, L->zs);
  };

  std::vector<ReductionInstance::Group> groups;
  groups.push_back({"vertex-pairs", L->pairs.size(), [L, finish](std::size_t idx, Sequence& out) {
                      auto [i, j] = L->pairs[idx];
                      out.push_back(L->v[i]);
                      out.push_back(L->v[j]);
                      push_except(out, L->v, {L->v[i], L->v[j]});
                      out.push_back(L->z);
                      push_all(out, L->t);
                      push_except(out, L->u, {L->z});
                      push_all(out, L->f);
                      push_all(out, L->w);
                      finish(out);
                    }});
  groups.push_back({"hub-clique-pairs", L->u_pairs.size(), [L, finish](std::size_t idx, Sequence& out) {
                      auto [i, j] = L->u_pairs[idx];
                      out.push_back(L->u[i]);
                      out.push_back(L->u[j]);
                      push_except(out, L->u, {L->u[i], L->u[j]});
                      push_all(out, L->t);
                      push_all(out, L->f);
                      push_all(out, L->v);
                      push_all(out, L->w);
                      finish(out);
                    }});
  groups.push_back({"t-first", m * 3 * n, [L, finish](std::size_t idx, Sequence& out) {
                      const Vertex ti = L->t[idx / (3 * L->n)], uj = L->u[idx % (3 * L->n)];
                      out.push_back(ti);
                      out.push_back(uj);
                      push_except(out, L->u, {uj});
                      push_except(out, L->t, {ti});
                      push_all(out, L->f);
                      push_all(out, L->v);
                      push_all(out, L->w);
                      finish(out);
                    }});
  groups.push_back({"pendant-first", n * (3 * n - 1), [L, finish](std::size_t idx, Sequence& out) {
                      const std::size_t i = idx / (3 * L->n - 1);
                      const Vertex uj = L->u[idx % (3 * L->n - 1)];
                      out.push_back(L->f[i]);
                      out.push_back(uj);
                      push_except(out, L->u, {uj, L->z});
                      out.push_back(L->z);
                      push_all(out, L->t);
                      push_except(out, L->f, {L->f[i]});
                      push_all(out, L->v);
                      push_all(out, L->w);
                      finish(out);
                    }});
  groups.push_back({"vertex-pendant", n, [L, push_t_split, finish](std::size_t i, Sequence& out) {
                      out.push_back(L->v[i]);
                      out.push_back(L->f[i]);
                      push_except(out, L->u, {L->z});
                      push_t_split(out, i, i, std::nullopt, true);
                      out.push_back(L->z);
                      push_t_split(out, i, i, std::nullopt, false);
                      push_except(out, L->f, {L->f[i]});
                      push_except(out, L->v, {L->v[i]});
                      push_all(out, L->w);
                      finish(out);
                    }});
  groups.push_back({"edge-gadgets", 6 * m, [L, push_t_split, finish](std::size_t idx, Sequence& out) {
                      const std::size_t x = idx / 6, var = idx % 6;
                      auto [i, j] = L->edges[x];
                      const Vertex vi = L->v[i], vj = L->v[j], tx = L->t[x], wa = L->w[x], wb = L->w[L->m + x];
                      Vertex first_w = kNoVertex;
                      switch (var) {
                        case 0: out.insert(out.end(), {wa, tx, vi, vj}); first_w = wa; break;
                        case 1: out.insert(out.end(), {wa, vi, tx, vj}); first_w = wa; break;
                        case 2: out.insert(out.end(), {wb, tx, vj, vi}); first_w = wb; break;
                        case 3: out.insert(out.end(), {wb, vj, tx, vi}); first_w = wb; break;
                        case 4: out.insert(out.end(), {tx, vi, vj}); break;
                        default: out.insert(out.end(), {tx, vj, vi}); break;
                      }
                      out.push_back(L->z);
                      push_except(out, L->u, {L->z});
                      push_t_split(out, i, j, tx, true);
                      push_t_split(out, i, j, std::nullopt, false);
                      out.push_back(L->f[i]);
                      out.push_back(L->f[j]);
                      push_except(out, L->f, {L->f[i], L->f[j]});
                      push_except(out, L->v, {vi, vj});
                      if (first_w == kNoVertex)
                        push_all(out, L->w);
                      else
                        push_except(out, L->w, {first_w});
                      finish(out);
                    }});
  if (L->deg)
    groups.push_back({"hub-pendant-first", n, [L](std::size_t i, Sequence& out) {
                        out.push_back(L->zs[i]);
                        out.push_back(L->z);
                        push_except(out, L->zs, {L->zs[i]});
                        push_except(out, L->u, {L->z});
                        push_all(out, L->t);
                        push_all(out, L->f);
                        push_all(out, L->v);
                        push_all(out, L->w);
                      }});
  Graph base = bld.graph();
  const long long k = L->deg ? static_cast<long long>(kappa + m + 4 * n - 1)
                             : static_cast<long long>(kappa + base.edge_count());
  return ReductionInstance(p, bound, g, kappa, construction_name(p, bound), bld.universe(), std::move(base), L->z, L->v,
                           k, L->zs, std::move(groups));
}

}  // namespace

NamedGraph build_drone(std::size_t p, std::size_t q) {
  if (p == 0) throw std::invalid_argument("drone needs at least one clique vertex");
  Builder bld;
  std::vector<Vertex> core;
  for (std::size_t i = 0; i < p; ++i) core.push_back(bld.add("v" + num(i + 1)));
  bld.clique(core);
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = 0; j < q; ++j) bld.connect(core[i], bld.add("f" + num(i + 1) + "." + num(j + 1)));
  return NamedGraph{bld.universe(), bld.graph()};
}

ReductionInstance::ReductionInstance(Paradigm p, Bound b, NamedGraph source, std::size_t kappa,
                                     std::string construction, Universe universe, Graph base, Vertex hub,
                                     std::vector<Vertex> source_map, long long k, std::vector<Vertex> hub_pendants,
                                     std::vector<Group> groups)
    : paradigm_(p),
      bound_(b),
      source_(std::move(source)),
      kappa_(kappa),
      construction_(std::move(construction)),
      universe_(std::move(universe)),
      base_(std::move(base)),
      hub_(hub),
      source_map_(std::move(source_map)),
      k_(k),
      hub_pendants_(std::move(hub_pendants)),
      groups_(std::move(groups)) {
  for (const auto& gr : groups_) {
    offsets_.push_back(total_);
    total_ += gr.count;
  }
}

void ReductionInstance::ordering_into(std::size_t index, Sequence& out) const {
  if (index >= total_) throw std::out_of_range("ordering index " + std::to_string(index) + " out of range");
  auto it = std::upper_bound(offsets_.begin(), offsets_.end(), index);
  const std::size_t gi = static_cast<std::size_t>(it - offsets_.begin()) - 1;
  out.clear();
  groups_[gi].fill(index - offsets_[gi], out);
}

Sequence ReductionInstance::ordering(std::size_t index) const {
  Sequence out;
  out.reserve(vertex_count());
  ordering_into(index, out);
  return out;
}

Profile ReductionInstance::to_profile(std::size_t limit) const {
  if (total_ > limit)
    throw SizeLimitError("instance has " + std::to_string(total_) + " orderings, above the limit of " +
                         std::to_string(limit));
  std::vector<Ordering> orderings;
  orderings.reserve(total_);
  for (std::size_t i = 0; i < total_; ++i) orderings.emplace_back(ordering(i));
  return Profile(universe_, std::move(orderings));
}

std::vector<std::pair<std::string, std::string>> ReductionInstance::meta() const {
  std::vector<std::pair<std::string, std::string>> out;
  out.emplace_back("paradigm", std::string(to_string(paradigm_)));
  out.emplace_back("bound", std::string(to_string(bound_)));
  out.emplace_back("kappa", std::to_string(kappa_));
  out.emplace_back("construction", construction_);
  out.emplace_back("orderings", std::to_string(total_));
  out.emplace_back("source-vertices", source_.universe.join(Ordering::identity(source_.universe.size()).sequence()));
  for (const Edge& e : source_.graph.edges())
    out.emplace_back("source-edge", source_.universe.name(e.u) + " " + source_.universe.name(e.v));
  return out;
}

ReductionInstance reduce(Paradigm p, Bound b, const NamedGraph& g, std::size_t kappa) {
  const Source s = check_source(g, kappa);
  switch (p) {
    case Paradigm::BFS:
    case Paradigm::LexBFS: return reduce_bfs(p, b, g, kappa, s);
    case Paradigm::DFS: return reduce_dfs(p, b, g, kappa, s);
    case Paradigm::LexDFS: return reduce_lexdfs(p, b, g, kappa, s);
    case Paradigm::MCS: return reduce_mcs(p, b, g, kappa, s);
    case Paradigm::MNS: return reduce_mns(p, b, g, kappa, s);
    case Paradigm::GS: break;
  }
  throw std::invalid_argument("no reduction is available for generic search");
}

Graph supporting_graph(const ReductionInstance& inst, std::span<const Vertex> cover) {
  const Graph& src = inst.source().graph;
  if (!std::all_of(cover.begin(), cover.end(), [&](Vertex c) { return c < src.vertex_count(); }))
    throw LookupError("cover vertex outside the source graph");
  std::vector<bool> in(src.vertex_count(), false);
  for (Vertex c : cover) in[c] = true;
  for (const Edge& e : src.edges())
    if (!in[e.u] && !in[e.v]) throw std::invalid_argument("cover misses a source edge");
  std::vector<Edge> extra;
  for (Vertex c : cover) extra.emplace_back(inst.hub(), inst.source_map()[c]);
  return inst.base_graph().with_edges(extra);
}

ForwardReport validate_forward(const ReductionInstance& inst, std::span<const Vertex> cover, std::size_t threads) {
  const Graph h = supporting_graph(inst, cover);
  ForwardReport report;
  report.edges = h.edge_count();
  report.max_degree = h.max_degree();
  const auto measure = static_cast<long long>(inst.bound() == Bound::Edge ? report.edges : report.max_degree);
  report.bound_ok = measure <= inst.k();

  // Partition refinement makes simulation the cheaper route for LexBFS; MCS has no four-point form.
  const Paradigm p = inst.paradigm();
  const bool simulate = p == Paradigm::LexBFS || p == Paradigm::MCS;
  auto accepts = [&](Sequence& seq) {
    Ordering sigma;
    try {
      sigma = Ordering(std::move(seq));
    } catch (const std::invalid_argument&) {
      throw InternalError("construction produced a sequence that is not a permutation");
    }
    return simulate ? certify_by_simulation(h, sigma, p) : is_s_ordering(h, sigma, p);
  };

  const std::size_t total = inst.ordering_count();
  threads = std::max<std::size_t>(1, std::min(threads, total == 0 ? 1 : total));
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::atomic<std::size_t> first{kNone};
  std::vector<std::size_t> checked(threads, 0);
  std::vector<std::exception_ptr> errors(threads);

  auto work = [&](std::size_t tid) {
    try {
      const std::size_t lo = total * tid / threads, hi = total * (tid + 1) / threads;
      Sequence seq;
      for (std::size_t i = lo; i < hi && i < first.load(); ++i) {
        inst.ordering_into(i, seq);
        ++checked[tid];
        if (!accepts(seq)) {
          std::size_t cur = first.load();
          while (i < cur && !first.compare_exchange_weak(cur, i)) {
          }
          break;
        }
      }
    } catch (...) {
      errors[tid] = std::current_exception();
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(work, t);
    for (auto& th : pool) th.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  for (std::size_t c : checked) report.checked += c;
  if (first.load() != kNone) {
    report.orderings_ok = false;
    report.first_failure = first.load();
  }
  return report;
}

void write_instance(std::ostream& out, const ReductionInstance& inst) {
  const Universe& u = inst.universe();
  out << "vertices: " << u.join(Ordering::identity(u.size()).sequence()) << "\n";
  out << "k: " << inst.k() << "\n";
  for (const auto& [key, value] : inst.meta()) out << "# " << key << ": " << value << "\n";
  Sequence seq;
  for (std::size_t i = 0; i < inst.ordering_count(); ++i) {
    inst.ordering_into(i, seq);
    for (std::size_t j = 0; j < seq.size(); ++j) {
      if (j) out << ' ';
      out << u.name(seq[j]);
    }
    out << '\n';
  }
}

}  // namespace gsp
