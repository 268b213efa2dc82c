#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gsp/core.hpp"

namespace gsp {

struct NamedGraph {
  Universe universe;
  Graph graph;
};

// Profile text with the optional extras written by `reduce`: a `k:` header line
// and `# key: value` comment lines placed before the first ordering.
struct ProfileDocument {
  Profile profile;
  std::optional<long long> k;
  std::vector<std::pair<std::string, std::string>> meta;
};

// Format (whitespace-separated tokens, '#' starts a comment line):
//   vertices: a b c
//   c a b          <- one ordering per line
ProfileDocument parse_profile_document(std::istream& in);
Profile parse_profile(std::istream& in);
Profile parse_profile(const std::string& text);
Profile read_profile_file(const std::string& path);

std::string format_profile(const Profile& p);
std::string format_profile_document(const ProfileDocument& doc);

// Format:
//   vertices: a b c
//   a b            <- one edge per line
NamedGraph parse_graph(std::istream& in);
NamedGraph parse_graph(const std::string& text);
NamedGraph read_graph_file(const std::string& path);

std::string format_graph(const NamedGraph& g);

// Space-separated vertex names to indices.
Sequence parse_sequence(const Universe& u, const std::string& text);

}  // namespace gsp
