#include "gsp/core.hpp"

#include <algorithm>
#include <cctype>
#include <deque>

namespace gsp {

namespace {

bool valid_token(std::string_view s) {
  if (s.empty()) return false;
  return std::none_of(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c) || c == '#'; });
}

}  // namespace

// ---- Universe ----

Universe::Universe(std::vector<std::string> names) : names_(std::move(names)) {
  index_.reserve(names_.size());
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (!valid_token(names_[i])) throw std::invalid_argument("invalid vertex name '" + names_[i] + "'");
    if (!index_.emplace(names_[i], static_cast<Vertex>(i)).second)
      throw std::invalid_argument("duplicate vertex name '" + names_[i] + "'");
  }
}

Universe Universe::alphabetic(std::size_t n) {
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    names.push_back(n <= 26 ? std::string(1, static_cast<char>('a' + i)) : "v" + std::to_string(i + 1));
  return Universe(std::move(names));
}

const std::string& Universe::name(Vertex v) const {
  if (v >= names_.size()) throw LookupError("vertex index " + std::to_string(v) + " outside universe");
  return names_[v];
}

Vertex Universe::index(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) throw LookupError("unknown vertex '" + std::string(name) + "'");
  return it->second;
}

std::optional<Vertex> Universe::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Sequence Universe::indices(std::span<const std::string> names) const {
  Sequence out;
  out.reserve(names.size());
  for (const auto& s : names) out.push_back(index(s));
  return out;
}

std::string Universe::join(std::span<const Vertex> seq, std::string_view sep) const {
  std::string out;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (i) out += sep;
    out += name(seq[i]);
  }
  return out;
}

// ---- Graph ----

Graph::Graph(std::size_t n) : adj_(n), rows_(n, Bitset(n)) {}

Graph::Graph(std::size_t n, std::span<const Edge> edges) : Graph(n) {
  edges_.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.v >= n) throw std::invalid_argument("edge endpoint outside vertex range");
    if (e.u == e.v) throw std::invalid_argument("self-loop at vertex " + std::to_string(e.u));
    if (rows_[e.u].test(e.v))
      throw std::invalid_argument("duplicate edge " + std::to_string(e.u) + "-" + std::to_string(e.v));
    rows_[e.u].set(e.v);
    rows_[e.v].set(e.u);
    adj_[e.u].push_back(e.v);
    adj_[e.v].push_back(e.u);
    edges_.push_back(e);
  }
  for (auto& a : adj_) std::sort(a.begin(), a.end());
  std::sort(edges_.begin(), edges_.end());
}

Graph Graph::complete(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph(n, edges);
}

std::size_t Graph::max_degree() const {
  std::size_t d = 0;
  for (const auto& a : adj_) d = std::max(d, a.size());
  return d;
}

Graph Graph::with_edges(std::span<const Edge> extra) const {
  std::vector<Edge> fresh;
  for (const Edge& e : extra) {
    if (e.u == e.v || e.v >= vertex_count()) throw std::invalid_argument("invalid edge in with_edges");
    if (!adjacent(e.u, e.v)) fresh.push_back(e);
  }
  std::sort(fresh.begin(), fresh.end());
  fresh.erase(std::unique(fresh.begin(), fresh.end()), fresh.end());
  std::vector<Edge> all = edges_;
  all.insert(all.end(), fresh.begin(), fresh.end());
  return Graph(vertex_count(), all);
}

Graph Graph::with_clique(std::span<const Vertex> clique) const {
  std::vector<Edge> extra;
  for (std::size_t i = 0; i < clique.size(); ++i)
    for (std::size_t j = i + 1; j < clique.size(); ++j) extra.emplace_back(clique[i], clique[j]);
  return with_edges(extra);
}

Graph Graph::induced(std::span<const Vertex> keep) const {
  std::vector<Vertex> local(vertex_count(), kNoVertex);
  for (std::size_t i = 0; i < keep.size(); ++i) local[keep[i]] = static_cast<Vertex>(i);
  std::vector<Edge> out;
  for (const Edge& e : edges_)
    if (local[e.u] != kNoVertex && local[e.v] != kNoVertex) out.emplace_back(local[e.u], local[e.v]);
  return Graph(keep.size(), out);
}

bool Graph::is_connected() const {
  const std::size_t n = vertex_count();
  if (n == 0) return true;
  std::vector<bool> seen(n, false);
  std::vector<Vertex> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    Vertex x = stack.back();
    stack.pop_back();
    for (Vertex y : adj_[x])
      if (!seen[y]) {
        seen[y] = true;
        ++reached;
        stack.push_back(y);
      }
  }
  return reached == n;
}

// ---- Ordering ----

Ordering::Ordering(Sequence seq) : seq_(std::move(seq)), rank_(seq_.size(), static_cast<std::size_t>(-1)) {
  for (std::size_t i = 0; i < seq_.size(); ++i) {
    Vertex v = seq_[i];
    if (v >= seq_.size() || rank_[v] != static_cast<std::size_t>(-1))
      throw std::invalid_argument("ordering is not a permutation of the universe");
    rank_[v] = i;
  }
}

Ordering Ordering::identity(std::size_t n) {
  Sequence s(n);
  for (std::size_t i = 0; i < n; ++i) s[i] = static_cast<Vertex>(i);
  return Ordering(std::move(s));
}

// ---- Profile ----

Profile::Profile(Universe universe, std::vector<Ordering> orderings)
    : universe_(std::move(universe)), orderings_(std::move(orderings)) {
  if (orderings_.empty()) throw std::invalid_argument("profile needs at least one ordering");
  for (const auto& o : orderings_)
    if (o.size() != universe_.size()) throw std::invalid_argument("ordering length differs from universe size");
}

// ---- Tree ----

Tree::Tree(Graph g) : graph_(std::move(g)), member_(graph_.vertex_count(), true) {
  const std::size_t n = graph_.vertex_count();
  if (n == 0 || graph_.edge_count() != n - 1 || !graph_.is_connected())
    throw std::invalid_argument("graph is not a tree");
  members_.resize(n);
  for (std::size_t i = 0; i < n; ++i) members_[i] = static_cast<Vertex>(i);
}

Tree::Tree(std::size_t universe_size, std::vector<Vertex> members, std::span<const Edge> edges)
    : graph_(universe_size, edges), members_(std::move(members)), member_(universe_size, false) {
  std::sort(members_.begin(), members_.end());
  if (members_.empty()) throw std::invalid_argument("tree needs at least one vertex");
  for (Vertex v : members_) {
    if (v >= universe_size || member_[v]) throw std::invalid_argument("invalid tree member list");
    member_[v] = true;
  }
  for (const Edge& e : graph_.edges())
    if (!member_[e.u] || !member_[e.v]) throw std::invalid_argument("tree edge leaves the member set");
  if (graph_.edge_count() + 1 != members_.size()) throw std::invalid_argument("not a tree: wrong edge count");
  auto d = distances(members_.front());
  for (Vertex v : members_)
    if (d[v] < 0) throw std::invalid_argument("not a tree: members are disconnected");
}

void Tree::check_member(Vertex v) const {
  if (!contains(v)) throw LookupError("vertex " + std::to_string(v) + " is not in the tree");
}

std::vector<Vertex> Tree::parents(Vertex root) const {
  check_member(root);
  std::vector<Vertex> parent(universe_size(), kNoVertex);
  std::vector<bool> seen(universe_size(), false);
  std::deque<Vertex> queue{root};
  seen[root] = true;
  while (!queue.empty()) {
    Vertex x = queue.front();
    queue.pop_front();
    for (Vertex y : graph_.neighbors(x))
      if (!seen[y]) {
        seen[y] = true;
        parent[y] = x;
        queue.push_back(y);
      }
  }
  return parent;
}

std::vector<int> Tree::distances(Vertex from) const {
  check_member(from);
  std::vector<int> dist(universe_size(), -1);
  std::deque<Vertex> queue{from};
  dist[from] = 0;
  while (!queue.empty()) {
    Vertex x = queue.front();
    queue.pop_front();
    for (Vertex y : graph_.neighbors(x))
      if (dist[y] < 0) {
        dist[y] = dist[x] + 1;
        queue.push_back(y);
      }
  }
  return dist;
}

std::vector<Vertex> Tree::path(Vertex u, Vertex v) const {
  check_member(u);
  check_member(v);
  auto parent = parents(v);
  std::vector<Vertex> out{u};
  while (out.back() != v) out.push_back(parent[out.back()]);
  return out;
}

// ---- operations ----

Sequence ordering_prefix(const Ordering& sigma, std::size_t i) {
  if (i < 1 || i > sigma.size())
    throw std::out_of_range("prefix length " + std::to_string(i) + " outside 1.." + std::to_string(sigma.size()));
  return Sequence(sigma.begin(), sigma.begin() + static_cast<std::ptrdiff_t>(i));
}

Sequence sequence_delete(std::span<const Vertex> seq, std::span<const Vertex> removed) {
  Vertex top = 0;
  for (Vertex v : seq) top = std::max(top, v + 1);
  std::vector<bool> drop(top, false);
  for (Vertex v : removed)
    if (v < top) drop[v] = true;
  Sequence out;
  out.reserve(seq.size());
  for (Vertex v : seq)
    if (!drop[v]) out.push_back(v);
  return out;
}

Sequence ordering_delete(const Ordering& sigma, std::span<const Vertex> removed) {
  for (Vertex v : removed)
    if (v >= sigma.size()) throw LookupError("vertex " + std::to_string(v) + " outside universe");
  return sequence_delete(sigma.sequence(), removed);
}

Sequence ordering_up_to(const Ordering& sigma, Vertex u) {
  if (u >= sigma.size()) throw LookupError("vertex " + std::to_string(u) + " outside universe");
  return ordering_prefix(sigma, sigma.position(u));
}

std::vector<Vertex> tree_path(const Tree& t, Vertex u, Vertex v) { return t.path(u, v); }

void require_distinct(std::span<const Vertex> seq, std::size_t n, std::string_view what) {
  std::vector<bool> seen(n, false);
  for (Vertex v : seq) {
    if (v >= n) throw std::invalid_argument(std::string(what) + ": vertex outside universe");
    if (seen[v]) throw std::invalid_argument(std::string(what) + ": repeated vertex");
    seen[v] = true;
  }
}

}  // namespace gsp
