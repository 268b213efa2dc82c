#include "gsp/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "gsp/attachment.hpp"
#include "gsp/dfs_tree.hpp"
#include "gsp/io.hpp"
#include "gsp/oracles.hpp"
#include "gsp/reductions.hpp"
#include "gsp/traversals.hpp"
#include "gsp/verifiers.hpp"

namespace gsp {

namespace {

constexpr int kYes = 0;
constexpr int kNo = 1;
constexpr int kError = 2;

Paradigm paradigm_arg(const std::string& s) {
  auto p = parse_paradigm(s);
  if (!p) throw std::invalid_argument("unknown paradigm '" + s + "'");
  return *p;
}

void print_edges(std::ostream& out, const Universe& u, const std::vector<Edge>& edges) {
  for (const Edge& e : edges) out << u.name(e.u) << ' ' << u.name(e.v) << '\n';
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Graph search orderings: verification, support recognition and hardness instances", "gsp"};
  app.require_subcommand(1);

  std::string paradigm, graph_file, profile_file, ordering_text, method = "auto", start, problem, bound, out_file,
      recognizer;
  std::size_t cap = 8, kappa = 0;
  long long k = -1;
  bool dot = false;

  auto* verify = app.add_subcommand("verify", "Check whether an ordering is a search ordering of a graph");
  verify->add_option("--paradigm", paradigm, "gs, bfs, dfs, lexbfs, lexdfs, mcs or mns")->required();
  verify->add_option("--graph", graph_file, "Graph file")->required();
  verify->add_option("--ordering", ordering_text, "Space-separated vertex names")->required();
  verify->add_option("--method", method, "auto, four-point or simulation")
      ->check(CLI::IsMember({"auto", "four-point", "simulation"}));

  auto* generate = app.add_subcommand("generate", "Produce one ordering, lowest index first on ties");
  generate->add_option("--paradigm", paradigm)->required();
  generate->add_option("--graph", graph_file)->required();
  generate->add_option("--start", start, "First vertex");

  auto* enumerate = app.add_subcommand("enumerate", "List every ordering of a small graph");
  enumerate->add_option("--paradigm", paradigm)->required();
  enumerate->add_option("--graph", graph_file)->required();
  enumerate->add_option("--cap", cap, "Largest vertex count accepted");

  auto* recognize = app.add_subcommand("recognize", "Decide whether a profile has a tree support");
  recognize->add_option("--paradigm", recognizer, "dfs-tree or gs-tree")
      ->required()
      ->check(CLI::IsMember({"dfs-tree", "gs-tree", "dfs", "gs"}));
  recognize->add_option("--profile", profile_file)->required();

  auto* attachment = app.add_subcommand("attachment", "Print the attachment digraph of a profile");
  attachment->add_option("--profile", profile_file)->required();
  attachment->add_flag("--dot", dot, "Graphviz output");

  auto* solve = app.add_subcommand("solve", "Exhaustive support search for small profiles");
  solve->add_option("--problem", problem, "edge, deg or tree")->required()->check(CLI::IsMember({"edge", "deg", "tree"}));
  solve->add_option("--paradigm", paradigm)->required();
  solve->add_option("--profile", profile_file)->required();
  solve->add_option("--k", k, "Edge or degree bound");

  auto* reduce_cmd = app.add_subcommand("reduce", "Build a support instance from a cubic graph");
  reduce_cmd->add_option("--paradigm", paradigm)->required();
  reduce_cmd->add_option("--bound", bound, "edge or deg")->required()->check(CLI::IsMember({"edge", "deg", "degree"}));
  reduce_cmd->add_option("--graph", graph_file)->required();
  reduce_cmd->add_option("--kappa", kappa, "Vertex cover size")->required();
  reduce_cmd->add_option("--out", out_file, "Output file (default: standard output)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kYes;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kError;
  }

  try {
    if (verify->parsed()) {
      const Paradigm p = paradigm_arg(paradigm);
      const NamedGraph g = read_graph_file(graph_file);
      const Ordering sigma(parse_sequence(g.universe, ordering_text));
      if (sigma.size() != g.graph.vertex_count()) throw std::invalid_argument("ordering must list every vertex once");
      bool ok = false;
      std::optional<Triple> violation;
      if (method == "simulation" || (method == "auto" && !property_of(p))) {
        ok = certify_by_simulation(g.graph, sigma, p);
      } else {
        auto prop = property_of(p);
        if (!prop) throw std::invalid_argument("MCS has no four-point check");
        auto r = satisfies_property(g.graph, sigma, *prop);
        ok = r.holds;
        violation = r.violation;
      }
      out << (ok ? "YES" : "NO") << '\n';
      if (violation) {
        out << "violation: " << g.universe.name(violation->a) << ' ' << g.universe.name(violation->b) << ' '
            << g.universe.name(violation->c) << '\n';
      }
      return ok ? kYes : kNo;
    }

    if (generate->parsed()) {
      const Paradigm p = paradigm_arg(paradigm);
      const NamedGraph g = read_graph_file(graph_file);
      std::optional<Vertex> s;
      if (!start.empty()) s = g.universe.index(start);
      out << g.universe.join(generate_ordering(g.graph, p, s).sequence()) << '\n';
      return kYes;
    }

    if (enumerate->parsed()) {
      const Paradigm p = paradigm_arg(paradigm);
      const NamedGraph g = read_graph_file(graph_file);
      for (const Ordering& o : enumerate_orderings(g.graph, p, cap)) out << g.universe.join(o.sequence()) << '\n';
      return kYes;
    }

    if (recognize->parsed()) {
      const Profile profile = read_profile_file(profile_file);
      if (recognizer.rfind("dfs", 0) == 0) {
        RecognitionOutcome r = recognize_dfs_tree(profile);
        if (!r.yes) {
          out << "NO " << reason_code(*r.reason) << '\n';
          return kNo;
        }
        out << "YES\n";
        print_edges(out, profile.universe(), r.witness->edges());
        return kYes;
      }
      GsTreeOutcome r = recognize_gs_tree(profile);
      if (!r.admits) {
        const bool connected = build_attachment_digraph(profile).underlying().is_connected();
        out << "NO " << (connected ? "EMPTY_BLOCKER_SET" : "DISCONNECTED_ATTACHMENT") << '\n';
        return kNo;
      }
      out << "YES\n";
      print_edges(out, profile.universe(), r.witness->edges());
      return kYes;
    }

    if (attachment->parsed()) {
      const Profile profile = read_profile_file(profile_file);
      const Universe& u = profile.universe();
      const AttachmentDigraph d = build_attachment_digraph(profile);
      if (dot) {
        out << "digraph attachment {\n";
        for (Vertex v = 0; v < d.vertex_count(); ++v)
          out << "  \"" << u.name(v) << "\" [shape=" << (d.is_forced(v) ? "box" : "ellipse") << "];\n";
        for (const Arc& a : d.arcs()) out << "  \"" << u.name(a.from) << "\" -> \"" << u.name(a.to) << "\";\n";
        out << "}\n";
        return kYes;
      }
      for (const Arc& a : d.arcs()) out << u.name(a.from) << " -> " << u.name(a.to) << '\n';
      out << "forced:";
      for (Vertex v : d.forced_vertices()) out << ' ' << u.name(v);
      out << "\nfree:";
      for (Vertex v : d.free_vertices()) out << ' ' << u.name(v);
      out << '\n';
      return kYes;
    }

    if (solve->parsed()) {
      const Paradigm p = paradigm_arg(paradigm);
      const Profile profile = read_profile_file(profile_file);
      ProblemKind kind = ProblemKind::tree_support();
      if (problem != "tree") {
        if (k < 0) throw std::invalid_argument("--k is required and must be non-negative");
        kind = problem == "edge" ? ProblemKind::edge_bounded(k) : ProblemKind::degree_bounded(k);
      }
      auto g = brute_force_graph_support(profile, p, kind);
      if (!g) {
        out << "NO\n";
        return kNo;
      }
      out << "YES\n";
      print_edges(out, profile.universe(), g->edges());
      return kYes;
    }

    if (reduce_cmd->parsed()) {
      const Paradigm p = paradigm_arg(paradigm);
      const NamedGraph g = read_graph_file(graph_file);
      const ReductionInstance inst = reduce(p, *parse_bound(bound), g, kappa);
      if (out_file.empty()) {
        write_instance(out, inst);
      } else {
        std::ofstream file(out_file);
        if (!file) throw std::invalid_argument("cannot write '" + out_file + "'");
        write_instance(file, inst);
      }
      return kYes;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kError;
  }
  return kError;
}

}  // namespace gsp
