#pragma once

#include <map>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "gsp/attachment.hpp"
#include "gsp/core.hpp"

namespace gsp {

// Candidate parents of each free vertex: a set of forced vertices, ascending.
using QMap = std::map<Vertex, std::vector<Vertex>>;

// Nearest forced vertex before v in sigma. Throws InternalError if none.
Vertex guider(const Ordering& sigma, Vertex v, const std::vector<bool>& forced);

// Q(sigma, v): vertices of the tstar path from the guider of v to w, where w is
// sigma(1) if no forced vertex follows v, and otherwise the parent (tstar rooted
// at sigma(1)) of the nearest forced vertex after v. Ascending.
std::vector<Vertex> q_path(const Ordering& sigma, Vertex v, const Tree& tstar, const std::vector<bool>& forced);

struct PurifyStats {
  std::size_t sweeps = 0;
  std::size_t effective_applications = 0;
};

// Repeatedly trims pairs u < v of free vertices sharing a guider w in some
// ordering: Q(v) loses the vertices closer to w than all of Q(u), Q(u) loses
// those farther from w than all of Q(v). Pairs are swept in (ordering, pos u,
// pos v) order until nothing changes.
QMap purify(QMap q, const Profile& profile, const Tree& tstar, const std::vector<bool>& forced,
            PurifyStats* stats = nullptr);

// Does `set` induce a path in the tree?
bool is_subpath(const Tree& t, std::span<const Vertex> set);

// tstar plus, for each free v, the edge to the element of Q(v) minimising
// `rank`. An empty rank means vertex index order. Throws std::invalid_argument
// on an empty Q set.
Tree assign_parents(const Tree& tstar, const QMap& q, std::span<const std::size_t> rank = {});

enum class NoReason {
  DisconnectedAttachment,
  ForcedNotTree,
  TstarNotSupportFull,
  RestrictionFails,
  EmptyQ,
  FinalVerifyFailed,
};

std::string_view reason_code(NoReason r);

struct RecognitionOutcome {
  bool yes = false;
  std::optional<Tree> witness;
  std::optional<NoReason> reason;
};

// Decides whether some tree is a DFS-support of every ordering in the profile.
RecognitionOutcome recognize_dfs_tree(const Profile& profile);

}  // namespace gsp
