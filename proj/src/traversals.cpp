#include "gsp/traversals.hpp"

#include <algorithm>
#include <cctype>
#include <string>

#include "gsp/verifiers.hpp"

namespace gsp {

std::string_view to_string(Paradigm p) {
  switch (p) {
    case Paradigm::GS: return "GS";
    case Paradigm::BFS: return "BFS";
    case Paradigm::DFS: return "DFS";
    case Paradigm::LexBFS: return "LexBFS";
    case Paradigm::LexDFS: return "LexDFS";
    case Paradigm::MCS: return "MCS";
    case Paradigm::MNS: return "MNS";
  }
  return "?";
}

std::optional<Paradigm> parse_paradigm(std::string_view s) {
  std::string lower(s);
  std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
  for (Paradigm p : kAllParadigms) {
    std::string name(to_string(p));
    std::transform(name.begin(), name.end(), name.begin(), [](unsigned char c) { return std::tolower(c); });
    if (name == lower) return p;
  }
  return std::nullopt;
}

namespace {

bool is_lex(Paradigm p) { return p == Paradigm::LexBFS || p == Paradigm::LexDFS; }

}  // namespace

SearchState::SearchState(const Graph& g, Paradigm p)
    : g_(&g), paradigm_(p), n_(g.vertex_count()), visited_(n_, false) {
  if (is_lex(p)) {
    class_of_.assign(n_, 0);
    if (n_ > 0) {
      head_ = new_class();
      class_size_[head_] = static_cast<std::uint32_t>(n_);
    }
  } else if (p == Paradigm::MNS) {
    mns_label_.assign(n_, Bitset(n_));
  } else {
    label_.assign(n_, 0);
    histogram_.assign(n_ + 2, 0);
    histogram_[0] = static_cast<std::uint32_t>(n_);
  }
}

bool SearchState::is_candidate(Vertex v) const {
  if (v >= n_ || visited_[v]) return false;
  if (is_lex(paradigm_)) return class_of_[v] == head_;
  if (paradigm_ == Paradigm::MNS) {
    const Bitset& mine = mns_label_[v];
    for (Vertex u = 0; u < n_; ++u)
      if (u != v && !visited_[u] && mine.is_proper_subset_of(mns_label_[u])) return false;
    return true;
  }
  return label_[v] == max_label_;
}

std::vector<Vertex> SearchState::candidates() const {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < n_; ++v)
    if (is_candidate(v)) out.push_back(v);
  return out;
}

Vertex SearchState::lowest_candidate() const {
  for (Vertex v = 0; v < n_; ++v)
    if (is_candidate(v)) return v;
  return kNoVertex;
}

void SearchState::visit(Vertex v) {
  if (v >= n_) throw std::invalid_argument("visit: vertex outside universe");
  if (visited_[v]) throw std::invalid_argument("visit: vertex already visited");
  visited_[v] = true;
  ++step_;
  if (is_lex(paradigm_))
    visit_partition(v);
  else if (paradigm_ == Paradigm::MNS)
    visit_mns(v);
  else
    visit_numeric(v);
}

void SearchState::bump(Vertex u, std::uint32_t value) {
  std::uint32_t& l = label_[u];
  if (value == l) return;
  --histogram_[l];
  ++histogram_[value];
  l = value;
  max_label_ = std::max(max_label_, value);
}

void SearchState::visit_numeric(Vertex v) {
  --histogram_[label_[v]];
  const auto i = static_cast<std::uint32_t>(step_);
  const auto n = static_cast<std::uint32_t>(n_);
  for (Vertex u : g_->neighbors(v)) {
    if (visited_[u]) continue;
    switch (paradigm_) {
      case Paradigm::GS: bump(u, 1); break;
      case Paradigm::BFS: bump(u, std::max(label_[u], n - i)); break;
      case Paradigm::DFS: bump(u, i); break;
      case Paradigm::MCS: bump(u, label_[u] + 1); break;
      default: break;
    }
  }
  while (max_label_ > 0 && histogram_[max_label_] == 0) --max_label_;
}

std::uint32_t SearchState::new_class() {
  class_size_.push_back(0);
  class_prev_.push_back(kNil);
  class_next_.push_back(kNil);
  class_split_.push_back(kNil);
  return static_cast<std::uint32_t>(class_size_.size() - 1);
}

void SearchState::unlink_class(std::uint32_t c) {
  std::uint32_t p = class_prev_[c], q = class_next_[c];
  if (p == kNil)
    head_ = q;
  else
    class_next_[p] = q;
  if (q != kNil) class_prev_[q] = p;
  class_prev_[c] = class_next_[c] = kNil;
}

void SearchState::visit_partition(Vertex v) {
  std::uint32_t own = class_of_[v];
  if (--class_size_[own] == 0) unlink_class(own);

  std::vector<std::uint32_t> touched;
  for (Vertex u : g_->neighbors(v)) {
    if (visited_[u]) continue;
    std::uint32_t c = class_of_[u];
    if (class_split_[c] == kNil) {
      class_split_[c] = 0;  // placeholder until the new class is allocated
      touched.push_back(c);
    }
  }
  if (touched.empty()) return;

  if (paradigm_ == Paradigm::LexBFS) {
    // Appending a value smaller than every earlier one: neighbours move just
    // ahead of the rest of their class.
    for (std::uint32_t c : touched) {
      std::uint32_t nc = new_class();
      std::uint32_t p = class_prev_[c];
      class_prev_[nc] = p;
      class_next_[nc] = c;
      class_prev_[c] = nc;
      if (p == kNil)
        head_ = nc;
      else
        class_next_[p] = nc;
      class_split_[c] = nc;
    }
  } else {
    // Prepending a value larger than every earlier one: neighbours move to the
    // front, keeping their previous relative order.
    std::vector<std::uint32_t> rank(class_size_.size(), 0);
    std::uint32_t r = 0;
    for (std::uint32_t c = head_; c != kNil; c = class_next_[c]) rank[c] = r++;
    std::sort(touched.begin(), touched.end(), [&](std::uint32_t a, std::uint32_t b) { return rank[a] < rank[b]; });
    std::uint32_t after = kNil;
    for (std::uint32_t c : touched) {
      std::uint32_t nc = new_class();
      if (after == kNil) {
        class_next_[nc] = head_;
        if (head_ != kNil) class_prev_[head_] = nc;
        head_ = nc;
      } else {
        std::uint32_t q = class_next_[after];
        class_prev_[nc] = after;
        class_next_[nc] = q;
        class_next_[after] = nc;
        if (q != kNil) class_prev_[q] = nc;
      }
      after = nc;
      class_split_[c] = nc;
    }
  }

  for (Vertex u : g_->neighbors(v)) {
    if (visited_[u]) continue;
    std::uint32_t c = class_of_[u];
    std::uint32_t nc = class_split_[c];
    if (nc == kNil) continue;  // u already moved into a fresh class
    --class_size_[c];
    ++class_size_[nc];
    class_of_[u] = nc;
  }
  for (std::uint32_t c : touched) {
    class_split_[c] = kNil;
    if (class_size_[c] == 0) unlink_class(c);
  }
}

void SearchState::visit_mns(Vertex v) {
  for (Vertex u : g_->neighbors(v))
    if (!visited_[u]) mns_label_[u].set(v);
}

std::vector<Vertex> step_candidates(const Graph& g, std::span<const Vertex> prefix, Paradigm p) {
  require_distinct(prefix, g.vertex_count(), "prefix");
  SearchState st(g, p);
  for (Vertex v : prefix) st.visit(v);
  return st.candidates();
}

Ordering generate_ordering(const Graph& g, Paradigm p, std::optional<Vertex> start) {
  if (g.vertex_count() == 0) throw std::invalid_argument("graph has no vertices");
  if (start && *start >= g.vertex_count()) throw LookupError("start vertex outside universe");
  SearchState st(g, p);
  Sequence seq;
  seq.reserve(g.vertex_count());
  if (start) {
    st.visit(*start);
    seq.push_back(*start);
  }
  while (!st.done()) {
    Vertex v = st.lowest_candidate();
    st.visit(v);
    seq.push_back(v);
  }
  return Ordering(std::move(seq));
}

namespace {

void enumerate_from(const SearchState& st, Sequence& current, std::vector<Ordering>& out) {
  if (st.done()) {
    out.emplace_back(current);
    return;
  }
  for (Vertex c : st.candidates()) {
    SearchState next = st;
    next.visit(c);
    current.push_back(c);
    enumerate_from(next, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<Ordering> enumerate_orderings(const Graph& g, Paradigm p, std::size_t cap) {
  if (g.vertex_count() == 0) throw std::invalid_argument("graph has no vertices");
  if (g.vertex_count() > cap)
    throw SizeLimitError("enumeration capped at " + std::to_string(cap) + " vertices");
  std::vector<Ordering> out;
  Sequence current;
  enumerate_from(SearchState(g, p), current, out);
  // Candidates are explored in ascending order, so `out` is already sorted.
  return out;
}

Ordering complete_prefix(const Graph& g, std::span<const Vertex> prefix, Paradigm p) {
  require_distinct(prefix, g.vertex_count(), "prefix");
  Graph star = g.with_clique(prefix);
  SearchState st(star, p);
  Sequence seq(prefix.begin(), prefix.end());
  seq.reserve(g.vertex_count());
  for (Vertex v : prefix) st.visit(v);
  while (!st.done()) {
    Vertex v = st.lowest_candidate();
    st.visit(v);
    seq.push_back(v);
  }
  return Ordering(std::move(seq));
}

bool is_partial_ordering(const Graph& g, std::span<const Vertex> prefix, Paradigm p) {
  return is_s_ordering(g, complete_prefix(g, prefix, p), p);
}

}  // namespace gsp
