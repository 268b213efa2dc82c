#include "gsp/verifiers.hpp"

#include <algorithm>
#include <bit>

namespace gsp {

std::string_view to_string(FourPointProperty p) {
  switch (p) {
    case FourPointProperty::S: return "S";
    case FourPointProperty::B: return "B";
    case FourPointProperty::D: return "D";
    case FourPointProperty::LB: return "LB";
    case FourPointProperty::LD: return "LD";
    case FourPointProperty::M: return "M";
  }
  return "?";
}

Paradigm paradigm_of(FourPointProperty p) {
  switch (p) {
    case FourPointProperty::S: return Paradigm::GS;
    case FourPointProperty::B: return Paradigm::BFS;
    case FourPointProperty::D: return Paradigm::DFS;
    case FourPointProperty::LB: return Paradigm::LexBFS;
    case FourPointProperty::LD: return Paradigm::LexDFS;
    case FourPointProperty::M: return Paradigm::MNS;
  }
  return Paradigm::GS;
}

std::optional<FourPointProperty> property_of(Paradigm p) {
  switch (p) {
    case Paradigm::GS: return FourPointProperty::S;
    case Paradigm::BFS: return FourPointProperty::B;
    case Paradigm::DFS: return FourPointProperty::D;
    case Paradigm::LexBFS: return FourPointProperty::LB;
    case Paradigm::LexDFS: return FourPointProperty::LD;
    case Paradigm::MNS: return FourPointProperty::M;
    case Paradigm::MCS: return std::nullopt;
  }
  return std::nullopt;
}

namespace {

void require_size(const Graph& g, const Ordering& sigma) {
  if (sigma.size() != g.vertex_count())
    throw std::invalid_argument("ordering length " + std::to_string(sigma.size()) + " differs from vertex count " +
                                std::to_string(g.vertex_count()));
}

// Neighbour extremes in position space. -1 / n stand for "none".
struct Extremes {
  std::vector<long> first, last, last_before;
};

Extremes extremes(const Graph& g, const Ordering& sigma) {
  const long n = static_cast<long>(sigma.size());
  Extremes e{std::vector<long>(n, n), std::vector<long>(n, -1), std::vector<long>(n, -1)};
  for (long x = 0; x < n; ++x) {
    for (Vertex u : g.neighbors(sigma[x])) {
      long p = static_cast<long>(sigma.rank(u));
      e.first[x] = std::min(e.first[x], p);
      e.last[x] = std::max(e.last[x], p);
      if (p < x) e.last_before[x] = std::max(e.last_before[x], p);
    }
  }
  return e;
}

// Linear-time screens for S, B and D. A failing screen is followed by the
// exhaustive search, which names the violating triple.
bool quick_holds(const Graph& g, const Ordering& sigma, FourPointProperty p) {
  const long n = static_cast<long>(sigma.size());
  const Extremes e = extremes(g, sigma);
  // prefix_last[x] = max last[a] over positions a < x
  std::vector<long> prefix_last(n + 1, -1);
  for (long x = 0; x < n; ++x) prefix_last[x + 1] = std::max(prefix_last[x], e.last[x]);

  switch (p) {
    case FourPointProperty::S:
      for (long b = 0; b < n; ++b)
        if (e.first[b] > b && prefix_last[b] > b) return false;
      return true;
    case FourPointProperty::B:
      for (long b = 0; b < n; ++b)
        if (prefix_last[std::min(b, e.first[b])] > b) return false;
      return true;
    case FourPointProperty::D: {
      // Candidates a lie strictly between the last earlier neighbour of b and b.
      int levels = n > 1 ? std::bit_width(static_cast<unsigned long>(n)) : 1;
      std::vector<std::vector<long>> table(levels, std::vector<long>(n, -1));
      table[0] = e.last;
      for (int k = 1; k < levels; ++k)
        for (long i = 0; i + (1L << k) <= n; ++i)
          table[k][i] = std::max(table[k - 1][i], table[k - 1][i + (1L << (k - 1))]);
      auto range_max = [&](long lo, long hi) {  // [lo, hi)
        int k = std::bit_width(static_cast<unsigned long>(hi - lo)) - 1;
        return std::max(table[k][lo], table[k][hi - (1L << k)]);
      };
      for (long b = 0; b < n; ++b) {
        long lo = e.last_before[b] + 1;
        if (lo < b && range_max(lo, b) > b) return false;
      }
      return true;
    }
    default:
      return false;
  }
}

std::optional<Triple> first_violation(const Graph& g, const Ordering& sigma, FourPointProperty p) {
  const std::size_t n = sigma.size();
  std::vector<Bitset> nb(n, Bitset(n));
  std::vector<std::size_t> last(n, 0);
  for (std::size_t x = 0; x < n; ++x)
    for (Vertex u : g.neighbors(sigma[x])) {
      std::size_t r = sigma.rank(u);
      nb[x].set(r);
      last[x] = std::max(last[x], r);
    }

  const bool per_c = p == FourPointProperty::LB || p == FourPointProperty::LD || p == FourPointProperty::M;
  for (std::size_t a = 0; a < n; ++a) {
    if (last[a] < a + 2) continue;
    for (std::size_t b = a + 1; b < last[a]; ++b) {
      if (nb[a].test(b)) continue;
      if (!per_c) {
        bool ok = false;
        switch (p) {
          case FourPointProperty::S: ok = nb[b].any_in_range(0, b); break;
          case FourPointProperty::B: ok = nb[b].any_in_range(0, a); break;
          case FourPointProperty::D: ok = nb[b].any_in_range(a + 1, b); break;
          default: break;
        }
        if (!ok) return Triple{sigma[a], sigma[b], sigma[nb[a].find_next(b)]};
        continue;
      }
      for (std::size_t c = nb[a].find_next(b); c != Bitset::npos; c = nb[a].find_next(c)) {
        bool ok = false;
        switch (p) {
          case FourPointProperty::LB: ok = nb[b].any_in_range_excluding(nb[c], 0, a); break;
          case FourPointProperty::LD: ok = nb[b].any_in_range_excluding(nb[c], a + 1, b); break;
          case FourPointProperty::M: ok = nb[b].any_in_range_excluding(nb[c], 0, b); break;
          default: break;
        }
        if (!ok) return Triple{sigma[a], sigma[b], sigma[c]};
      }
    }
  }
  return std::nullopt;
}

}  // namespace

PropertyCheck satisfies_property(const Graph& g, const Ordering& sigma, FourPointProperty p) {
  require_size(g, sigma);
  const bool screened = p == FourPointProperty::S || p == FourPointProperty::B || p == FourPointProperty::D;
  if (screened && quick_holds(g, sigma, p)) return {};
  auto v = first_violation(g, sigma, p);
  if (!v) {
    if (screened) throw InternalError("four-point screen disagrees with exhaustive search");
    return {};
  }
  return PropertyCheck{false, v};
}

bool is_s_ordering(const Graph& g, const Ordering& sigma, Paradigm p) {
  if (auto prop = property_of(p)) return satisfies_property(g, sigma, *prop).holds;
  return certify_by_simulation(g, sigma, p);
}

std::optional<std::size_t> first_simulation_failure(const Graph& g, const Ordering& sigma, Paradigm p) {
  require_size(g, sigma);
  SearchState st(g, p);
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    if (!st.is_candidate(sigma[i])) return i;
    st.visit(sigma[i]);
  }
  return std::nullopt;
}

bool certify_by_simulation(const Graph& g, const Ordering& sigma, Paradigm p) {
  return !first_simulation_failure(g, sigma, p).has_value();
}

bool bfs_first_vertex_check(const Graph& g, const Ordering& sigma) {
  require_size(g, sigma);
  if (sigma.size() == 0) return true;
  const Vertex a = sigma[0];
  std::size_t reach = 0;
  for (Vertex u : g.neighbors(a)) reach = std::max(reach, sigma.rank(u));
  for (std::size_t x = 1; x < reach; ++x)
    if (!g.adjacent(a, sigma[x])) return false;
  return true;
}

}  // namespace gsp
