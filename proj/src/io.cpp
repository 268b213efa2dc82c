#include "gsp/io.hpp"

#include <fstream>
#include <sstream>

namespace gsp {

namespace {

std::vector<std::string> tokens(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> out;
  for (std::string t; ss >> t;) out.push_back(t);
  return out;
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

// Reads lines, tracking numbers, and exposes the header once found.
class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  // Next line that is neither blank nor a comment. Comments are handed to `on_comment`.
  template <class OnComment>
  bool next(std::string& line, OnComment&& on_comment) {
    while (std::getline(in_, line)) {
      ++number_;
      std::string t = trim(line);
      if (t.empty()) continue;
      if (t[0] == '#') {
        on_comment(t);
        continue;
      }
      line = t;
      return true;
    }
    return false;
  }

  std::size_t number() const { return number_; }

 private:
  std::istream& in_;
  std::size_t number_ = 0;
};

Universe read_header(LineReader& reader) {
  std::string line;
  if (!reader.next(line, [](const std::string&) {})) throw ParseError(reader.number(), "missing 'vertices:' header");
  auto toks = tokens(line);
  if (toks.empty() || toks[0] != "vertices:") throw ParseError(reader.number(), "expected 'vertices:' header");
  toks.erase(toks.begin());
  try {
    return Universe(std::move(toks));
  } catch (const std::invalid_argument& e) {
    throw ParseError(reader.number(), e.what());
  }
}

std::ifstream open(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  return in;
}

}  // namespace

ProfileDocument parse_profile_document(std::istream& in) {
  LineReader reader(in);
  Universe universe = read_header(reader);
  std::optional<long long> k;
  std::vector<std::pair<std::string, std::string>> meta;
  std::vector<Ordering> orderings;

  auto on_comment = [&](const std::string& c) {
    if (!orderings.empty()) return;
    std::string body = trim(c.substr(1));
    auto colon = body.find(": ");
    if (colon == std::string::npos || colon == 0) return;
    meta.emplace_back(body.substr(0, colon), trim(body.substr(colon + 2)));
  };

  std::string line;
  while (reader.next(line, on_comment)) {
    auto toks = tokens(line);
    if (toks[0] == "k:") {
      if (k || !orderings.empty() || toks.size() != 2) throw ParseError(reader.number(), "misplaced 'k:' line");
      try {
        std::size_t used = 0;
        k = std::stoll(toks[1], &used);
        if (used != toks[1].size()) throw std::invalid_argument("trailing characters");
      } catch (const std::exception&) {
        throw ParseError(reader.number(), "bad integer after 'k:'");
      }
      continue;
    }
    Sequence seq;
    seq.reserve(toks.size());
    for (const auto& t : toks) {
      auto v = universe.find(t);
      if (!v) throw ParseError(reader.number(), "unknown vertex '" + t + "'");
      seq.push_back(*v);
    }
    if (seq.size() != universe.size()) throw ParseError(reader.number(), "ordering must list every vertex once");
    try {
      orderings.emplace_back(std::move(seq));
    } catch (const std::invalid_argument&) {
      throw ParseError(reader.number(), "ordering is not a permutation of the vertices");
    }
  }
  if (orderings.empty()) throw ParseError(reader.number(), "profile has no orderings");
  return ProfileDocument{Profile(std::move(universe), std::move(orderings)), k, std::move(meta)};
}

Profile parse_profile(std::istream& in) { return parse_profile_document(in).profile; }

Profile parse_profile(const std::string& text) {
  std::istringstream in(text);
  return parse_profile(in);
}

Profile read_profile_file(const std::string& path) {
  auto in = open(path);
  return parse_profile(in);
}

std::string format_profile(const Profile& p) {
  return format_profile_document(ProfileDocument{p, std::nullopt, {}});
}

std::string format_profile_document(const ProfileDocument& doc) {
  const Universe& u = doc.profile.universe();
  std::string out = "vertices: " + u.join(Ordering::identity(u.size()).sequence()) + "\n";
  if (doc.k) out += "k: " + std::to_string(*doc.k) + "\n";
  for (const auto& [key, value] : doc.meta) out += "# " + key + ": " + value + "\n";
  for (const auto& o : doc.profile.orderings()) out += u.join(o.sequence()) + "\n";
  return out;
}

NamedGraph parse_graph(std::istream& in) {
  LineReader reader(in);
  Universe universe = read_header(reader);
  std::vector<Edge> edges;
  std::string line;
  auto ignore = [](const std::string&) {};
  while (reader.next(line, ignore)) {
    auto toks = tokens(line);
    if (toks.size() != 2) throw ParseError(reader.number(), "edge line needs exactly two vertices");
    auto a = universe.find(toks[0]);
    auto b = universe.find(toks[1]);
    if (!a || !b) throw ParseError(reader.number(), "unknown vertex in edge");
    if (*a == *b) throw ParseError(reader.number(), "self-loop");
    edges.emplace_back(*a, *b);
  }
  try {
    Graph g(universe.size(), edges);
    return NamedGraph{std::move(universe), std::move(g)};
  } catch (const std::invalid_argument& e) {
    throw ParseError(reader.number(), e.what());
  }
}

NamedGraph parse_graph(const std::string& text) {
  std::istringstream in(text);
  return parse_graph(in);
}

NamedGraph read_graph_file(const std::string& path) {
  auto in = open(path);
  return parse_graph(in);
}

std::string format_graph(const NamedGraph& g) {
  const Universe& u = g.universe;
  std::string out = "vertices: " + u.join(Ordering::identity(u.size()).sequence()) + "\n";
  for (const Edge& e : g.graph.edges()) out += u.name(e.u) + " " + u.name(e.v) + "\n";
  return out;
}

Sequence parse_sequence(const Universe& u, const std::string& text) {
  auto toks = tokens(text);
  return u.indices(toks);
}

}  // namespace gsp
