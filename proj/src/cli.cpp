#include "rgplanar/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "rgplanar/errors.hpp"
#include "rgplanar/io.hpp"

namespace rgp {

namespace {

// A graph to export, render or measure, with whatever came along with it.
struct GraphSource {
  std::string title;
  std::optional<CayleyDigraph> digraph;
  SimpleGraph graph;
  std::vector<std::string> names;
  std::vector<std::pair<double, double>> positions;  // ring layouts only
  std::optional<PlanarEmbedding> known_embedding;
};

std::optional<SimpleGraph> named_graph(const std::string& name) {
  if (name == "K4") return complete_graph(4);
  if (name == "K5") return complete_graph(5);
  if (name == "K33") return complete_bipartite(3, 3);
  if (name == "petersen") return petersen_graph();
  return std::nullopt;
}

const CatalogEntry* find_solid(const std::vector<CatalogEntry>& rows, const std::string& solid) {
  for (const auto& r : rows)
    if (r.solid == solid && r.planar) return &r;
  return nullptr;
}

GraphSource load_graph(const CommandConfig& c) {
  GraphSource src;
  if (!c.named_graph.empty()) {
    auto g = named_graph(c.named_graph);
    if (!g) throw Error("unknown graph '" + c.named_graph + "' (K4, K5, K33, petersen)");
    src.title = c.named_graph;
    src.graph = *g;
    for (int v = 0; v < g->vertex_count(); ++v) src.names.push_back(std::to_string(v));
    return src;
  }
  if (!c.ring.empty()) {
    CycleFamily family;
    if (c.ring == "cyclic") family = CycleFamily::kCyclic;
    else if (c.ring == "dihedral") family = CycleFamily::kDihedral;
    else throw Error("--ring takes cyclic or dihedral");
    auto b = build_cycle_band_embedding(family, c.ring_n, c.k);
    src.title = c.ring + " ring n=" + std::to_string(c.ring_n) + " k=" + std::to_string(c.k);
    src.digraph = b.digraph;
    src.graph = b.embedding.graph;
    src.names = b.digraph.vertex_names;
    src.positions = b.positions;
    src.known_embedding = b.embedding;
    return src;
  }
  if (!c.solid.empty()) {
    const auto rows = maschke_catalog();
    const CatalogEntry* row = find_solid(rows, c.solid);
    if (!row) throw Error("no catalog row for solid '" + c.solid + "'");
    const GroupTable g = parse_group_spec(row->group_spec);
    src.title = row->group_spec + " " + row->solid;
    src.digraph = cayley_digraph(g, catalog_generators(g, *row));
    src.graph = underlying_graph(*src.digraph);
    src.names = src.digraph->vertex_names;
    return src;
  }
  if (c.group_spec.empty()) throw Error("give --group with --gen, --solid, --ring or --graph");
  if (c.generators.empty()) throw Error("--gen is required with --group");
  const GroupTable g = parse_group_spec(c.group_spec);
  std::vector<int> members;
  if (c.k == 0) {
    for (const auto& name : c.generators) members.push_back(g.at(name));
    src.digraph = cayley_digraph(g, ElementSet(members));
  } else {
    const RightGroupTable s = right_group(g, c.k);
    for (const auto& name : c.generators) members.push_back(s.parse_element(name));
    src.digraph = cayley_digraph(s, ElementSet(members));
  }
  src.title = c.group_spec + " k=" + std::to_string(c.k);
  src.graph = underlying_graph(*src.digraph);
  src.names = src.digraph->vertex_names;
  return src;
}

void emit(const CommandConfig& c, const std::string& text, std::ostream& out) {
  if (c.output_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(c.output_path, std::ios::binary);
  if (!f) throw Error("cannot write " + c.output_path);
  f << text;
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("cannot write " + path);
  f << j.dump(2) << "\n";
}

int cmd_characterize(const CommandConfig& c, std::ostream& out, std::ostream& err) {
  const GroupTable g = parse_group_spec(c.group_spec);
  DecisionCaps caps;
  caps.subject_cap = c.subject_cap;
  caps.node_budget = c.node_budget;
  caps.max_size_override = c.max_size;
  caps.prefix_pruning = c.prefix_pruning;
  PlanarityVerdict v;
  try {
    v = decide_right_group_planarity(g, c.k, caps);
  } catch (const CapExceeded& e) {
    err << "cap exceeded: " << e.what() << "\n";
    if (c.json) out << Json{{"subject", {{"group", c.group_spec}, {"k", c.k}}}, {"verdict", "cap_exceeded"}}.dump(2) << "\n";
    return kExitCap;
  }
  const RightGroupTable s = right_group(g, c.k);
  Json report = verdict_to_json(v, s);
  const bool predicted = characterization_predicts_planar(g, c.k);
  report["predicted"] = predicted ? "planar" : "non_planar";
  bool ok = true;
  if (v.verdict == Verdict::kPlanar) {
    const bool certified = verify_certificate(g, v);
    report["certificate_verified"] = certified;
    ok = certified;
  }
  if (v.verdict != Verdict::kCapExceeded) ok = ok && ((v.verdict == Verdict::kPlanar) == predicted);
  report["agrees"] = ok;
  if (c.seed != 0 && s.size() <= 16) {
    const auto scan = scan_all_subsets(s, 0.05, c.seed);
    report["subset_scan"] = {{"subsets", scan.subsets},
                             {"generating", scan.generating},
                             {"planar", scan.planar},
                             {"witnesses_checked", scan.witnesses_checked},
                             {"witnesses_verified", scan.witnesses_verified},
                             {"seed", c.seed}};
    ok = ok && (scan.planar > 0) == (v.verdict == Verdict::kPlanar) &&
         scan.witnesses_checked == scan.witnesses_verified;
  }
  if (!c.output_path.empty()) write_json_file(c.output_path, report);
  if (!c.embedding_path.empty() && v.embedding) write_json_file(c.embedding_path, embedding_to_json(*v.embedding));
  if (c.json) {
    out << report.dump(2) << "\n";
  } else {
    out << c.group_spec << " x R" << c.k << ": " << to_string(v.verdict) << "\n";
    out << "  size bound |C| <= " << v.bound.max_size << ", tested " << v.tested << ", rejected projection "
        << v.rejected_projection << " edge_bound " << v.rejected_edge_bound << " kuratowski "
        << v.rejected_kuratowski << ", pruned prefixes " << v.pruned_prefixes << "\n";
    if (v.connection) {
      out << "  certificate:";
      for (int x : *v.connection) out << " " << s.name(x);
      out << "\n";
    }
    if (!ok) out << "  DISAGREES with the characterization\n";
  }
  if (v.verdict == Verdict::kCapExceeded) return kExitCap;
  return ok ? kExitOk : kExitExpectation;
}

int cmd_verify_table(const CommandConfig& c, std::ostream& out, std::ostream&) {
  auto rows = maschke_catalog(c.family_cap);
  for (int r : c.tamper_rows) {
    if (r < 0 || r >= static_cast<int>(rows.size())) throw Error("--tamper row out of range");
    rows[r].expected_edges += 1;
  }
  Json report = Json::array();
  int failures = 0;
  for (size_t i = 0; i < rows.size(); ++i) {
    const auto& row = rows[i];
    const GroupTable g = parse_group_spec(row.group_spec);
    const SimpleGraph graph = underlying_graph(g, catalog_generators(g, row));
    const auto pr = test_planarity(graph);
    bool certified = false;
    if (pr.planar && pr.embedding) certified = verify_embedding(*pr.embedding);
    if (!pr.planar && pr.witness) certified = verify_kuratowski(graph, *pr.witness);
    const bool counts = graph.vertex_count() == row.expected_vertices && graph.edge_count() == row.expected_edges;
    const bool planar_ok = pr.planar == (c.strict ? true : row.planar);
    const bool ok = counts && planar_ok && certified;
    if (!ok) ++failures;
    std::string gens;
    for (const auto& gname : row.generators) gens += (gens.empty() ? "" : ",") + gname;
    report.push_back({{"row", i},
                      {"group", row.group_spec},
                      {"generators", row.generators},
                      {"solid", row.solid},
                      {"expected", {{"vertices", row.expected_vertices}, {"edges", row.expected_edges}}},
                      {"computed", {{"vertices", graph.vertex_count()}, {"edges", graph.edge_count()}}},
                      {"planar", pr.planar},
                      {"listed_planar", row.planar},
                      {"certificate_verified", certified},
                      {"ok", ok}});
    if (!c.json) {
      out << (ok ? "ok   " : "FAIL ") << "#" << i << " " << row.group_spec << " {" << gens << "} " << row.solid
          << ": " << graph.vertex_count() << "/" << graph.edge_count() << " (listed " << row.expected_vertices << "/"
          << row.expected_edges << ") " << (pr.planar ? "planar" : "non-planar");
      if (!row.planar) out << " [listed row is not planar; repair follows]";
      out << "\n";
    }
  }
  if (c.json) out << Json{{"rows", report}, {"failures", failures}}.dump(2) << "\n";
  else out << rows.size() << " rows, " << failures << " failing\n";
  return failures == 0 ? kExitOk : kExitExpectation;
}

int cmd_conjecture(const CommandConfig& c, std::ostream& out, std::ostream&) {
  const auto r = check_conjecture(c.size_cap, c.minor_budget);
  Json failures = Json::array();
  for (const auto& f : r.failures) {
    const RightGroupTable s = right_group(parse_group_spec(f.group_spec), f.k);
    std::vector<std::string> names;
    for (int x : f.connection) names.push_back(s.name(x));
    failures.push_back({{"group", f.group_spec},
                        {"k", f.k},
                        {"connection", names},
                        {"status", f.status == ConjectureStatus::kCounterexample ? "counterexample" : "unresolved"}});
  }
  const Json j{{"size_cap", r.size_cap},
               {"groups", r.groups},
               {"verified", r.verified},
               {"unresolved", r.unresolved},
               {"counterexamples", r.counterexamples},
               {"by_route", {{"identity", r.by_identity}, {"factor_minor", r.by_factor}, {"minor_search", r.by_search}}},
               {"failures", failures}};
  if (c.json) out << j.dump(2) << "\n";
  else
    out << "|S| <= " << r.size_cap << ": " << r.verified << " verified (" << r.by_identity << " identity, "
        << r.by_factor << " factor, " << r.by_search << " search), " << r.unresolved << " unresolved, "
        << r.counterexamples << " counterexamples\n";
  if (r.counterexamples > 0) return kExitExpectation;
  return r.unresolved > 0 ? kExitCap : kExitOk;
}

int cmd_cayley(const CommandConfig& c, std::ostream& out, std::ostream&) {
  const GraphSource src = load_graph(c);
  Json j{{"title", src.title},
         {"vertices", src.graph.vertex_count()},
         {"edges", src.graph.edge_count()},
         {"triangle", has_triangle(src.graph)},
         {"connected", src.graph.is_connected()},
         {"three_connected", is_three_connected(src.graph)},
         {"planar", is_planar(src.graph)}};
  if (src.digraph) {
    j["arcs"] = src.digraph->arcs.size();
    j["strongly_connected"] = is_strongly_connected(*src.digraph);
  }
  if (c.k > 0 && !c.group_spec.empty() && src.digraph) {
    const RightGroupTable s = right_group(parse_group_spec(c.group_spec), c.k);
    const Rational f = edge_count_formula(s, src.digraph->connection);
    std::ostringstream os;
    os << f;
    j["generates"] = generates_right_group(s, src.digraph->connection);
    j["edge_count_formula"] = os.str();
  }
  if (c.json) {
    out << j.dump(2) << "\n";
  } else {
    for (auto it = j.begin(); it != j.end(); ++it) out << it.key() << ": " << it.value().dump() << "\n";
  }
  return kExitOk;
}

int cmd_export(const CommandConfig& c, std::ostream& out, std::ostream&) {
  const GraphSource src = load_graph(c);
  if (!src.digraph) throw Error("export needs a Cayley graph source");
  const std::string fmt = c.format.empty() ? "dot" : c.format;
  if (fmt == "dot") emit(c, to_dot(*src.digraph), out);
  else if (fmt == "json") emit(c, digraph_to_json(*src.digraph).dump(2) + "\n", out);
  else if (fmt == "graphml") emit(c, to_graphml(*src.digraph), out);
  else throw Error("export formats: dot, json, graphml");
  return kExitOk;
}

int cmd_render(const CommandConfig& c, std::ostream& out, std::ostream& err) {
  const GraphSource src = load_graph(c);
  const std::string fmt = c.format.empty() ? "svg" : c.format;
  if (fmt != "svg" && fmt != "faces") throw Error("render formats: svg, faces");
  std::optional<PlanarEmbedding> e = src.known_embedding;
  if (!e) {
    auto pr = test_planarity(src.graph);
    if (!pr.planar) {
      err << "render refused: " << src.title << " has no genus-0 embedding\n";
      if (pr.witness) err << witness_to_json(*pr.witness).dump() << "\n";
      return kExitExpectation;
    }
    e = pr.embedding;
  }
  if (!e || !verify_embedding_componentwise(*e)) throw Error("embedding failed verification");
  if (fmt == "svg") {
    std::optional<std::vector<ExactPoint>> pos;
    if (!src.positions.empty()) pos = exact_points(src.positions);
    else pos = tutte_layout(*e);
    if (pos) {
      if (!straight_line_crossing_free(src.graph, *pos)) {
        err << "layout has a crossing\n";
        return kExitExpectation;
      }
      emit(c, to_svg(src.graph, *pos, src.names), out);
      return kExitOk;
    }
    err << "no straight-line layout for a graph that is not 3-connected; writing face walks\n";
  }
  emit(c, face_walk_dump(*e, src.names), out);
  return kExitOk;
}

int cmd_genus(const CommandConfig& c, std::ostream& out, std::ostream& err) {
  const GraphSource src = load_graph(c);
  const auto r = min_genus_bruteforce(src.graph, c.rotation_budget);
  if (r.exceeded) {
    err << "rotation budget " << c.rotation_budget << " exceeded\n";
    return kExitCap;
  }
  const Json j{{"title", src.title},
               {"min_genus", r.min_genus},
               {"max_genus", r.max_genus},
               {"rotations", r.rotations}};
  if (c.json) out << j.dump(2) << "\n";
  else out << src.title << ": genus " << r.min_genus << " (max " << r.max_genus << ", " << r.rotations
           << " rotation systems)\n";
  return kExitOk;
}

}  // namespace

int run_command(const CommandConfig& c, std::ostream& out, std::ostream& err) {
  try {
    if (c.subcommand == "characterize") return cmd_characterize(c, out, err);
    if (c.subcommand == "verify-table") return cmd_verify_table(c, out, err);
    if (c.subcommand == "conjecture") return cmd_conjecture(c, out, err);
    if (c.subcommand == "cayley") return cmd_cayley(c, out, err);
    if (c.subcommand == "export") return cmd_export(c, out, err);
    if (c.subcommand == "render") return cmd_render(c, out, err);
    if (c.subcommand == "genus") return cmd_genus(c, out, err);
    err << "unknown subcommand '" << c.subcommand << "'\n";
    return kExitUsage;
  } catch (const CapExceeded& e) {
    err << "cap exceeded: " << e.what() << "\n";
    return kExitCap;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CommandConfig c;
  CLI::App app{"Cayley graphs of right groups: construction, planarity, verification"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  auto caps = [&](CLI::App* sub) {
    sub->add_option("--subject-cap", c.subject_cap, "largest |G|*k decided")
        ->envname("RGPLANAR_SUBJECT_CAP")
        ->check(CLI::PositiveNumber);
    sub->add_option("--node-budget", c.node_budget, "search nodes before giving up")
        ->envname("RGPLANAR_NODE_BUDGET")
        ->check(CLI::PositiveNumber);
    sub->add_option("--max-size", c.max_size, "override the derived bound on |C|")->check(CLI::PositiveNumber);
  };
  auto source = [&](CLI::App* sub) {
    sub->add_option("--group", c.group_spec, "group spec, e.g. Z6, D4, Z2xA4");
    sub->add_option("--k", c.k, "number of bands; 0 for the plain group")->check(CLI::NonNegativeNumber);
    sub->add_option("--gen", c.generators, "connection element, repeatable: (g,r2) or g@2");
    sub->add_option("--solid", c.solid, "catalog row by solid name");
    sub->add_option("--ring", c.ring, "ring construction: cyclic or dihedral");
    sub->add_option("--n", c.ring_n, "ring parameter");
    sub->add_option("--graph", c.named_graph, "K4, K5, K33 or petersen");
  };
  auto json_flag = [&](CLI::App* sub) { sub->add_flag("--json", c.json, "machine-readable output"); };

  auto* ch = app.add_subcommand("characterize", "decide planarity of G x R_k with certificates");
  ch->add_option("--group", c.group_spec, "group spec")->required();
  ch->add_option("--k", c.k, "number of bands")->required()->check(CLI::PositiveNumber);
  caps(ch);
  ch->add_flag("!--no-prefix-pruning", c.prefix_pruning, "test every candidate in full");
  ch->add_option("--out", c.output_path, "write the JSON report here");
  ch->add_option("--embedding", c.embedding_path, "write the certificate embedding here");
  ch->add_option("--seed", c.seed, "seed for the sampled subset scan (0 disables)");
  json_flag(ch);

  auto* vt = app.add_subcommand("verify-table", "re-check every catalog row");
  vt->add_option("--family-cap", c.family_cap, "largest family parameter")->check(CLI::Range(3, 64));
  vt->add_option("--tamper", c.tamper_rows, "negative control: bump these rows' edge counts");
  vt->add_flag("--strict", c.strict, "fail on listed rows that are not planar");
  json_flag(vt);

  auto* cj = app.add_subcommand("conjecture", "minor conjecture over small right groups");
  cj->add_option("--size-cap", c.size_cap, "largest |S|")->check(CLI::Range(1, 24));
  cj->add_option("--minor-budget", c.minor_budget, "minor search nodes per case")
      ->envname("RGPLANAR_MINOR_BUDGET")
      ->check(CLI::PositiveNumber);
  json_flag(cj);

  auto* cy = app.add_subcommand("cayley", "build a Cayley graph and summarise it");
  source(cy);
  json_flag(cy);

  auto* ex = app.add_subcommand("export", "write a Cayley digraph");
  source(ex);
  ex->add_option("--format", c.format, "dot, json or graphml")->check(CLI::IsMember({"dot", "json", "graphml"}));
  ex->add_option("--out", c.output_path, "output file (stdout when absent)");

  auto* rd = app.add_subcommand("render", "straight-line SVG or face walks of a plane embedding");
  source(rd);
  rd->add_option("--format", c.format, "svg or faces")->check(CLI::IsMember({"svg", "faces"}));
  rd->add_option("--out", c.output_path, "output file (stdout when absent)");

  auto* ge = app.add_subcommand("genus", "minimum genus by rotation enumeration");
  source(ge);
  ge->add_option("--rotation-budget", c.rotation_budget, "rotation systems before giving up")
      ->envname("RGPLANAR_ROTATION_BUDGET")
      ->check(CLI::PositiveNumber);
  json_flag(ge);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    const auto subs = app.get_subcommands();
    out << (subs.empty() ? app.help() : subs.front()->help());
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n" << "run with --help for usage\n";
    return kExitUsage;
  }
  for (auto* sub : app.get_subcommands()) c.subcommand = sub->get_name();
  return run_command(c, out, err);
}

}  // namespace rgp
